// Measures-model semantics: extended naturals, measures over the atom
// universe, formula evaluation, random model generation, the bounded
// brute-force satisfiability oracle, and the symbolic permutation-model
// witness rendering.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardcomp/algebra.hpp"
#include "cardcomp/basics.hpp"
#include "cardcomp/syntax.hpp"

namespace cardcomp {

// N extended with one absorbing infinity.
struct ExtNat {
    bool infinite = false;
    BigInt value = 0;  // meaningful only when finite

    static ExtNat inf() { return ExtNat{true, 0}; }
    static ExtNat of(BigInt v);

    ExtNat operator+(const ExtNat& o) const;
    bool operator==(const ExtNat& o) const;
    bool operator<(const ExtNat& o) const;
    bool operator<=(const ExtNat& o) const { return *this < o || *this == o; }
    bool operator>=(const ExtNat& o) const { return o <= *this; }
    bool operator>(const ExtNat& o) const { return o < *this; }
    std::string to_string() const;  // decimal digits, or "inf"
};

// A finitely-additive measure given by its value on each atom.
struct Measure {
    std::vector<ExtNat> atom_values;

    explicit Measure(std::size_t n_atoms = 0) : atom_values(n_atoms) {}
    std::size_t universe_size() const { return atom_values.size(); }
    ExtNat of(const AtomSet& s) const;
    bool all_finite() const;
    bool operator==(const Measure&) const = default;
};

enum class ModelKind { Finitary, Infinitary };

// A model: a label valuation into the atom algebra plus a nonempty list of
// measures, at least one of which gives the whole universe positive size
// (admissibility). Finitary models carry no infinite values.
struct MeasuresModel {
    ModelKind kind = ModelKind::Finitary;
    LabelRegistry labels;
    std::vector<AtomSet> valuation;  // one set per label, registry order
    std::vector<Measure> measures;

    std::size_t n_atoms() const { return std::size_t{1} << labels.size(); }

    // Valuation sending label i to the atoms whose bit i is set.
    static std::vector<AtomSet> free_valuation(const LabelRegistry& labels);

    // Structural checks (sizes, kind/finiteness, admissibility).
    void validate() const;  // throws Error on violation
};

// Term and formula evaluation. Terms evaluate through the valuation;
// |s| >= |t| holds when every measure agrees.
AtomSet eval_term(const MeasuresModel& m, const TermPtr& t);
bool eval_formula(const MeasuresModel& m, const FormulaPtr& f);
bool model_satisfies(const MeasuresModel& m, const std::vector<FormulaPtr>& formulas);

// ---------------------------------------------------------------------------
// Random models (free valuation, seeded, deterministic across platforms).
// ---------------------------------------------------------------------------

struct RandomModelBounds {
    std::size_t max_measures = 3;
    std::uint64_t max_value = 4;
    std::uint64_t infinity_percent = 25;  // per-entry chance, infinitary only
};

MeasuresModel random_model(const LabelRegistry& labels, ModelKind kind, std::uint64_t seed,
                           const RandomModelBounds& bounds = {});

// ---------------------------------------------------------------------------
// Bounded brute-force satisfiability for a literal conjunction, over models
// with free valuation and at most max_measures measures with atom values in
// {0..max_value} (plus infinity for infinitary kind).
//
// Returns the first satisfying measure list in canonical order — shorter
// lists first, then lexicographic by measure tuples (atom 0 most
// significant; values ordered 0 < 1 < ... < max_value < inf) — or nullopt
// when the whole bounded space contains no model. Throws BoundsTooLarge when
// the space (or the search) exceeds the step budget; a nullopt is an
// exhaustive negative within the bounds, not an unsatisfiability proof.
// ---------------------------------------------------------------------------

struct OracleBounds {
    std::size_t max_measures = 3;
    std::uint64_t max_value = 4;
    std::uint64_t step_budget = 4'000'000;
};

std::optional<MeasuresModel> brute_force_sat(const std::vector<Literal>& conjunction,
                                             const LabelRegistry& labels, ModelKind kind,
                                             const OracleBounds& bounds = {});

// ---------------------------------------------------------------------------
// Symbolic witness: renders the model as a disjoint union of copies of
// amorphous urelement families, one family per measure, together with the
// comparison rule the construction satisfies.
// ---------------------------------------------------------------------------

struct SymbolicZfWitness {
    std::vector<std::string> family_names;                       // one per measure
    std::vector<std::pair<std::string, std::string>> label_sets; // label -> expression
    std::string comparison_rule;
    std::string text;  // full human-readable rendering
};

SymbolicZfWitness symbolic_zf_witness(const MeasuresModel& m);

}  // namespace cardcomp
