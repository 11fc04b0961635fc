// Atom-level combinatorics: bit-set atomization of terms over the free
// finite Boolean algebra on n labels (2^n atoms), balanced-sequence checks,
// integer indicator vectors, exact cone membership, and the ideal of sets
// reachable below a bound under a premise list.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cardcomp/basics.hpp"
#include "cardcomp/syntax.hpp"

namespace cardcomp {

// A subset of the atom universe {0, ..., n_atoms-1}. Atom index bit i gives
// the polarity of label i: atom a contains label L_i exactly when bit i of a
// is set. All binary operations require equal universes (DimensionMismatch).
class AtomSet {
  public:
    AtomSet() = default;
    explicit AtomSet(std::size_t n_atoms)
        : n_atoms_(n_atoms), words_((n_atoms + 63) / 64, 0) {}

    static AtomSet none(std::size_t n_atoms) { return AtomSet(n_atoms); }
    static AtomSet all(std::size_t n_atoms);
    static AtomSet single(std::size_t n_atoms, std::size_t atom);
    static AtomSet from_indices(std::size_t n_atoms, const std::vector<std::size_t>& atoms);

    std::size_t universe_size() const { return n_atoms_; }
    bool test(std::size_t atom) const;
    void set(std::size_t atom);
    void reset(std::size_t atom);
    std::size_t count() const;
    bool empty() const;
    std::vector<std::size_t> to_indices() const;

    AtomSet operator&(const AtomSet& o) const;
    AtomSet operator|(const AtomSet& o) const;
    AtomSet operator~() const;
    AtomSet minus(const AtomSet& o) const;   // *this & ~o
    bool subset_of(const AtomSet& o) const;
    bool operator==(const AtomSet& o) const = default;

  private:
    void check_same_universe(const AtomSet& o) const;
    std::size_t n_atoms_ = 0;
    std::vector<std::uint64_t> words_;
};

// Signed exact per-atom counts (difference vectors of indicator sums).
struct AtomVector {
    std::vector<BigInt> counts;

    explicit AtomVector(std::size_t n_atoms = 0) : counts(n_atoms, 0) {}
    std::size_t size() const { return counts.size(); }
    AtomVector& add(const AtomVector& o, const BigInt& scale = 1);
    bool is_zero() const;
    bool operator==(const AtomVector&) const = default;
};

// Interpret a core-or-sugared term over the free algebra: label i maps to
// the set of atoms with bit i set. Throws UnknownLabel if a label in the
// term is not in the registry.
AtomSet atomize(const TermPtr& term, const LabelRegistry& labels);

// Indicator of a set as a 0/1 integer vector.
AtomVector indicator(const AtomSet& s);

// Two sequences of sets are balanced when every atom is covered the same
// total number of times on each side.
bool is_balanced(const std::vector<AtomSet>& left, const std::vector<AtomSet>& right);

// Weighted variant: pairs (set, multiplicity >= 0).
bool is_balanced_weighted(const std::vector<std::pair<AtomSet, BigInt>>& left,
                          const std::vector<std::pair<AtomSet, BigInt>>& right);

// ---------------------------------------------------------------------------
// Cone membership: is target = sum_i lambda_i * gen_i for rational
// lambda_i >= 0?  Exact; the Yes answer carries integer multipliers n_i and a
// scale l >= 1 with  l * target = sum_i n_i * gen_i  and gcd(n_i, l) = 1.
// Among all solutions the reported one minimizes sum_i lambda_i (ties broken
// by the solver's deterministic pivoting), which pins the certificate shape.
// ---------------------------------------------------------------------------

struct ConeMembership {
    bool member = false;
    std::vector<BigInt> multipliers;  // one per generator (zeros included)
    BigInt scale = 1;                 // l >= 1
};

ConeMembership cone_member(const AtomVector& target, const std::vector<AtomVector>& generators);

// Membership test alone, skipping the canonical-multiplier minimization.
bool cone_feasible(const AtomVector& target, const std::vector<AtomVector>& generators);

// ---------------------------------------------------------------------------
// Ideal of sets derivably bounded by f, represented by its largest element
// (a union of atoms). Premises are ordered pairs (x, y) meaning |x| >= |y|.
//
// Growth loop: starting from atoms(f), a premise whose left side lies inside
// the current top pulls in its right side's atoms. The callback lets the
// caller decide membership for the remaining candidates with full
// derivability strength; the subset fast path already realizes the least
// fixpoint for cone-style derivability.
// ---------------------------------------------------------------------------

using Premise = std::pair<AtomSet, AtomSet>;  // (x, y): |x| >= |y|

struct IdealTop {
    AtomSet top;
    // Premise indices pulled, in pull order; replaying them from atoms(f)
    // reproduces top. Used as the certificate coverage chain.
    std::vector<std::size_t> pulls;
};

// derivably_below(y, top): may the set y be adjoined below the current top?
// Called only for premises whose left side is not yet inside top.
using DerivabilityProbe = std::function<bool(const AtomSet& y, const AtomSet& top)>;

IdealTop ideal_top(const AtomSet& f, const std::vector<Premise>& premises,
                   const DerivabilityProbe& probe = nullptr);

}  // namespace cardcomp
