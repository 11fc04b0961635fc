// JSON serialization of models, certificates, and witness bundles — the
// stable machine-readable artifact layer behind the CLI and the test suite.
// Integers are emitted as decimal strings (bit-exact at any size); infinite
// measure entries as the string "inf".
#pragma once

#include "json.hpp"

#include "cardcomp/decide.hpp"
#include "cardcomp/semantics.hpp"

namespace cardcomp {

using Json = nlohmann::ordered_json;

// {kind, labels, atoms, valuation: label -> [atom indices], measures: [[..]]}
Json model_to_json(const MeasuresModel& m);
MeasuresModel model_from_json(const Json& j);  // throws InputError on shape errors

// {logic, conclusion: {e, f}, scale, premises, atoms, reversed, coverage,
//  refutes}. `premises` holds the positive-literal uses, `atoms` the atom
// positivity uses, `reversed` the (fin-only) reversed-negative uses;
// `coverage` is a list of pull chains (concatenated on parse).
Json certificate_to_json(const CancellationCertificate& c);
CancellationCertificate certificate_from_json(const Json& j, std::size_t n_atoms);

// {model, annotations: [{negative, measure, rho}], admissibility_measure}
Json witness_to_json(const WitnessBundle& w);
WitnessBundle witness_from_json(const Json& j);

// {literals: [pretty-printed literal, ...]}
Json branch_to_json(const Branch& b);

// {families, label_sets, comparison_rule, text}
Json symbolic_witness_to_json(const SymbolicZfWitness& w);

}  // namespace cardcomp
