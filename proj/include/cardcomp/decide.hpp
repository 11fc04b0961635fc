// Decision procedures for the three logics of cardinality comparison:
//   fin  — a single total integer measure (finite sets),
//   ded  — families of finite measures (Dedekind-finite behaviour),
//   card — families of extended measures restricted through derivability
//          ideals (full choice-free behaviour).
// Satisfiability of literal branches, full SAT/entailment, cancellation
// certificates and their counting-only verifier, measure reconstruction from
// total preorders, and total-order extension.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cardcomp/algebra.hpp"
#include "cardcomp/basics.hpp"
#include "cardcomp/semantics.hpp"
#include "cardcomp/syntax.hpp"

namespace cardcomp {

enum class Logic { Fin, Ded, Card };

std::string logic_name(Logic l);
Logic logic_from_name(const std::string& name);  // throws InputError

// ---------------------------------------------------------------------------
// Branches: atomized literal conjunctions.
// ---------------------------------------------------------------------------

struct BranchLiteral {
    bool positive = true;
    AtomSet lhs, rhs;  // |lhs| >= |rhs| (or its negation)
    Literal source;    // term-level literal this came from
};

struct Branch {
    LabelRegistry labels;
    std::vector<BranchLiteral> literals;
    std::vector<std::size_t> positives, negatives;  // indices into literals

    std::size_t n_atoms() const { return std::size_t{1} << labels.size(); }
    // The positive literals as (lhs, rhs) premises, in literal order.
    std::vector<Premise> premises() const;
};

Branch atomize_branch(const std::vector<Literal>& literals, const LabelRegistry& labels);

// ---------------------------------------------------------------------------
// Cancellation certificates: a balanced-multiset identity deriving a
// comparison |e| <= |f| that contradicts one branch literal (or the
// nonemptiness of the universe). Verification is pure counting.
// ---------------------------------------------------------------------------

enum class PremiseKind {
    PositiveLiteral,   // index: branch literal index (must be positive)
    AtomPositivity,    // index: atom; the fact |{atom}| >= |0|
    ReversedNegative,  // index: branch literal index (negative); fin only
};

struct PremiseUse {
    PremiseKind kind = PremiseKind::PositiveLiteral;
    std::size_t index = 0;
    BigInt multiplicity = 1;
};

struct CancellationCertificate {
    Logic logic = Logic::Ded;
    AtomSet conclusion_e, conclusion_f;  // derived |e| <= |f|
    BigInt scale = 1;                    // multiplicity of the conclusion
    std::vector<PremiseUse> premises;
    // card only: replaying these positive-literal pulls from atoms(f) grows
    // the ideal top that eligible premises and atoms must lie inside.
    std::vector<std::size_t> coverage;
    // Branch literal contradicted: a negative literal index, or nullopt when
    // the conclusion is |1| <= |0| (contradicts admissibility).
    std::optional<std::size_t> refutes;
};

bool verify_certificate(const CancellationCertificate& cert, const Branch& branch);

// ---------------------------------------------------------------------------
// Derivability and ideals
// ---------------------------------------------------------------------------

// The ideal of sets derivably bounded by f under the branch's positive
// literals (with the logic's eligibility discipline). For fin/ded the ideal
// is the whole algebra; for card it is grown from atoms(f).
IdealTop closure(const Branch& branch, Logic logic, const AtomSet& f);

// Is |e| <= |f| derivable from the branch's premises in the given logic?
// Yes returns the canonical (multiplier-sum-minimal) certificate; the
// `refutes` field is left unset for the caller to fill.
std::optional<CancellationCertificate> derivable(const Branch& branch, Logic logic,
                                                 const AtomSet& e, const AtomSet& f);

// ---------------------------------------------------------------------------
// Branch satisfiability
// ---------------------------------------------------------------------------

struct WitnessAnnotation {
    std::size_t negative_index;  // branch literal index the measure refutes
    std::size_t measure_index;
    bool rho_type = false;  // card: 0-on-ideal / infinity-off-ideal measure
};

struct WitnessBundle {
    MeasuresModel model;
    std::vector<WitnessAnnotation> annotations;
    std::size_t admissibility_measure = 0;  // index of a measure with mu(1) >= 1
};

struct Limits {
    std::size_t max_labels = kMaxLabels;
    std::size_t max_branches = 4096;
    // decision LPs refuse universes beyond this many atoms
    std::size_t max_decision_atoms = 256;
    std::uint64_t step_budget = 10'000'000;
};

struct BranchOutcome {
    bool sat = false;
    std::optional<WitnessBundle> witness;                // sat
    std::vector<CancellationCertificate> certificates;   // unsat: one per violated literal
};

BranchOutcome sat_branch(const Branch& branch, Logic logic, const Limits& limits = {});

// Sign-aware check of a branch against a model (negatives hold when some
// measure reverses them strictly).
bool branch_satisfied(const MeasuresModel& model, const Branch& branch);

// ---------------------------------------------------------------------------
// Formula satisfiability / entailment
// ---------------------------------------------------------------------------

struct SatResult {
    bool sat = false;
    std::vector<Branch> branches;  // DNF branches, in distribution order
    std::size_t witness_branch = 0;
    std::optional<WitnessBundle> witness;
    // per-branch certificates (every branch refuted when unsat)
    std::vector<std::vector<CancellationCertificate>> branch_certificates;
};

SatResult sat(const FormulaPtr& formula, Logic logic, const LabelRegistry& labels,
              const Limits& limits = {});

// Entailment of `goal` from `assumptions`: unsatisfiability of the
// assumptions together with the negated goal. yes == !result.sat.
SatResult entails(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal, Logic logic,
                  const LabelRegistry& labels, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Measure reconstruction from a total preorder (the small-algebra engine
// behind the witness construction), and total-order extension.
// ---------------------------------------------------------------------------

// A relation over the subsets of a small atom universe; elements are bit
// masks over the universe's atoms, pairs (a, b) assert |a| >= |b|.
struct TotalOrder {
    std::size_t n_atoms = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

struct KpsViolation {
    std::string reason;
    // balanced sequences (with multiplicities) over the order's elements
    std::vector<std::pair<std::uint32_t, BigInt>> left, right;
    // the offending pair: for structural violations the elements that break
    // the check; for cancellation failures a pair the order makes strict
    // although its pairs force the reverse
    std::pair<std::uint32_t, std::uint32_t> violated{0, 0};
};

// Reconstructs a measure inducing exactly the given total preorder, or
// reports why none exists. Checks, in order: non-triviality, positivity,
// totality, transitivity, then the cancellation condition via the exact LP.
std::variant<Measure, KpsViolation> kps_measure(const TotalOrder& order);

struct ExtensionResult {
    std::vector<std::size_t> atom_map;  // local atom -> global atom index
    TotalOrder order;                   // over the local (ideal) universe
};

// Extends the derivability preorder generated by `premises` (restricted to
// the ideal with top `ideal`) to a total preorder on all subsets of the
// ideal, keeping the seeded non-relation  NOT |a| >= |b|  underivable.
// Throws SeedDerivable if |a| >= |b| is already forced, LimitExceeded if the
// ideal has more than 5 atoms.
ExtensionResult extend_to_total_order(const std::vector<Premise>& premises, const AtomSet& ideal,
                                      const AtomSet& a, const AtomSet& b);

}  // namespace cardcomp
