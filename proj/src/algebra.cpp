// Atom sets, indicator arithmetic, cone membership (via the exact LP), and
// the ideal-of-bounded-sets fixpoint.
#include "cardcomp/algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "cardcomp/lp.hpp"

namespace cardcomp {

// ===========================================================================
// AtomSet
// ===========================================================================

AtomSet AtomSet::all(std::size_t n_atoms) {
    AtomSet s(n_atoms);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
    std::size_t tail = n_atoms % 64;
    if (tail != 0 && !s.words_.empty()) s.words_.back() = (1ull << tail) - 1;
    return s;
}

AtomSet AtomSet::single(std::size_t n_atoms, std::size_t atom) {
    AtomSet s(n_atoms);
    s.set(atom);
    return s;
}

AtomSet AtomSet::from_indices(std::size_t n_atoms, const std::vector<std::size_t>& atoms) {
    AtomSet s(n_atoms);
    for (std::size_t a : atoms) s.set(a);
    return s;
}

void AtomSet::check_same_universe(const AtomSet& o) const {
    if (n_atoms_ != o.n_atoms_)
        throw DimensionMismatch("atom sets over different universes");
}

bool AtomSet::test(std::size_t atom) const {
    if (atom >= n_atoms_) throw DimensionMismatch("atom index out of range");
    return (words_[atom / 64] >> (atom % 64)) & 1;
}

void AtomSet::set(std::size_t atom) {
    if (atom >= n_atoms_) throw DimensionMismatch("atom index out of range");
    words_[atom / 64] |= 1ull << (atom % 64);
}

void AtomSet::reset(std::size_t atom) {
    if (atom >= n_atoms_) throw DimensionMismatch("atom index out of range");
    words_[atom / 64] &= ~(1ull << (atom % 64));
}

std::size_t AtomSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool AtomSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::vector<std::size_t> AtomSet::to_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n_atoms_; ++a)
        if (test(a)) out.push_back(a);
    return out;
}

AtomSet AtomSet::operator&(const AtomSet& o) const {
    check_same_universe(o);
    AtomSet r(n_atoms_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
}

AtomSet AtomSet::operator|(const AtomSet& o) const {
    check_same_universe(o);
    AtomSet r(n_atoms_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] | o.words_[w];
    return r;
}

AtomSet AtomSet::operator~() const {
    AtomSet r = AtomSet::all(n_atoms_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~words_[w];
    return r;
}

AtomSet AtomSet::minus(const AtomSet& o) const {
    check_same_universe(o);
    AtomSet r(n_atoms_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & ~o.words_[w];
    return r;
}

bool AtomSet::subset_of(const AtomSet& o) const {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~o.words_[w]) return false;
    return true;
}

// ===========================================================================
// atomize / indicator / balance
// ===========================================================================

AtomSet atomize(const TermPtr& term, const LabelRegistry& labels) {
    std::size_t n_atoms = std::size_t{1} << labels.size();
    switch (term->kind) {
        case TermKind::Label: {
            std::size_t i = labels.index_of(term->label);
            if (i == LabelRegistry::npos) throw UnknownLabel(term->label);
            AtomSet s(n_atoms);
            for (std::size_t a = 0; a < n_atoms; ++a)
                if ((a >> i) & 1) s.set(a);
            return s;
        }
        case TermKind::EmptyConst: return AtomSet::none(n_atoms);
        case TermKind::FullConst: return AtomSet::all(n_atoms);
        case TermKind::Complement: return ~atomize(term->a, labels);
        case TermKind::Intersection: return atomize(term->a, labels) & atomize(term->b, labels);
        case TermKind::Union: return atomize(term->a, labels) | atomize(term->b, labels);
    }
    throw Error("unreachable term kind");
}

AtomVector indicator(const AtomSet& s) {
    AtomVector v(s.universe_size());
    for (std::size_t a = 0; a < s.universe_size(); ++a)
        if (s.test(a)) v.counts[a] = 1;
    return v;
}

AtomVector& AtomVector::add(const AtomVector& o, const BigInt& scale) {
    if (counts.size() != o.counts.size())
        throw DimensionMismatch("atom vectors over different universes");
    for (std::size_t a = 0; a < counts.size(); ++a) counts[a] += scale * o.counts[a];
    return *this;
}

bool AtomVector::is_zero() const {
    for (const auto& c : counts)
        if (c != 0) return false;
    return true;
}

bool is_balanced(const std::vector<AtomSet>& left, const std::vector<AtomSet>& right) {
    std::vector<std::pair<AtomSet, BigInt>> l, r;
    l.reserve(left.size());
    r.reserve(right.size());
    for (const auto& s : left) l.emplace_back(s, 1);
    for (const auto& s : right) r.emplace_back(s, 1);
    return is_balanced_weighted(l, r);
}

bool is_balanced_weighted(const std::vector<std::pair<AtomSet, BigInt>>& left,
                          const std::vector<std::pair<AtomSet, BigInt>>& right) {
    std::size_t n = 0;
    bool have = false;
    for (const auto& [s, m] : left) { n = s.universe_size(); have = true; }
    for (const auto& [s, m] : right) { n = s.universe_size(); have = true; }
    if (!have) return true;
    AtomVector diff(n);
    for (const auto& [s, m] : left) {
        if (m < 0) throw Error("negative multiplicity");
        diff.add(indicator(s), m);
    }
    for (const auto& [s, m] : right) {
        if (m < 0) throw Error("negative multiplicity");
        diff.add(indicator(s), -m);
    }
    return diff.is_zero();
}

// ===========================================================================
// cone membership
// ===========================================================================

namespace {

void check_cone_dimensions(const AtomVector& target, const std::vector<AtomVector>& generators) {
    for (const auto& g : generators)
        if (g.size() != target.size())
            throw DimensionMismatch("generator over a different universe");
}

// Per-atom sign screen: a coordinate where the target is negative but no
// generator is (or positive but no generator is) admits no nonnegative
// combination, so the system is infeasible without solving anything.
bool cone_sign_blocked(const AtomVector& target, const std::vector<AtomVector>& generators) {
    for (std::size_t a = 0; a < target.size(); ++a) {
        const BigInt& t = target.counts[a];
        if (t == 0) continue;
        bool reachable = false;
        for (const auto& g : generators) {
            const BigInt& v = g.counts[a];
            if (t > 0 ? v > 0 : v < 0) { reachable = true; break; }
        }
        if (!reachable) return true;
    }
    return false;
}

// target = sum_i lambda_i * generators_i with lambda >= 0, as a linear system
LinSystem cone_system(const AtomVector& target, const std::vector<AtomVector>& generators) {
    std::size_t n_atoms = target.size();
    // variables: one multiplier per generator
    LinSystem sys(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i)
        sys.add_sparse({{i, Rational(1)}}, Rel::Geq, 0);  // lambda_i >= 0
    for (std::size_t a = 0; a < n_atoms; ++a) {
        std::vector<Rational> row(generators.size());
        for (std::size_t i = 0; i < generators.size(); ++i)
            row[i] = Rational(generators[i].counts[a]);
        sys.add(std::move(row), Rel::Eq, Rational(target.counts[a]));
    }
    return sys;
}

}  // namespace

bool cone_feasible(const AtomVector& target, const std::vector<AtomVector>& generators) {
    check_cone_dimensions(target, generators);
    if (cone_sign_blocked(target, generators)) return false;
    return solve(cone_system(target, generators)).feasible;
}

ConeMembership cone_member(const AtomVector& target, const std::vector<AtomVector>& generators) {
    check_cone_dimensions(target, generators);
    if (cone_sign_blocked(target, generators)) return ConeMembership{};
    LinSystem sys = cone_system(target, generators);

    // Minimize the multiplier sum: the smallest combination is the canonical
    // certificate (and is unique for the pinned acceptance instances).
    std::vector<Rational> objective(generators.size(), 1);
    LpResult r = solve_minimizing(sys, objective);

    ConeMembership out;
    if (!r.feasible) return out;
    out.member = true;

    std::vector<BigInt> scaled = integerize(r.point);
    // scale = lcm of denominators; recover it from any nonzero entry, or 1.
    BigInt scale = 1;
    for (std::size_t i = 0; i < r.point.size(); ++i) {
        if (r.point[i] != 0) {
            scale = scaled[i] / boost::multiprecision::numerator(r.point[i]) *
                    boost::multiprecision::denominator(r.point[i]);
            break;
        }
    }
    BigInt g = scale;
    for (const auto& m : scaled) g = boost::multiprecision::gcd(g, m);
    if (g == 0) g = 1;
    for (auto& m : scaled) m /= g;
    out.multipliers = std::move(scaled);
    out.scale = scale / g;
    return out;
}

// ===========================================================================
// ideal fixpoint
// ===========================================================================

IdealTop ideal_top(const AtomSet& f, const std::vector<Premise>& premises,
                   const DerivabilityProbe& probe) {
    IdealTop out;
    out.top = f;
    std::vector<bool> used(premises.size(), false);

    // Subset pulls run to fixpoint before the probe is ever consulted: that
    // keeps the recorded pull chain self-justifying (each pulled premise's
    // left side lies inside the top built so far), which is what certificate
    // coverage replays check.
    auto subset_sweep = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < premises.size(); ++i) {
                if (used[i]) continue;
                const auto& [x, y] = premises[i];
                if (!x.subset_of(out.top)) continue;
                used[i] = true;
                if (y.subset_of(out.top)) continue;
                out.top = out.top | y;
                out.pulls.push_back(i);
                grew = true;
            }
        }
    };

    subset_sweep();
    if (probe) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < premises.size(); ++i) {
                if (used[i]) continue;
                const auto& [x, y] = premises[i];
                if (y.subset_of(out.top)) continue;
                if (probe(y, out.top)) {
                    out.top = out.top | y;
                    out.pulls.push_back(i);
                    used[i] = true;
                    subset_sweep();
                    grew = true;
                }
            }
        }
    }
    return out;
}

}  // namespace cardcomp
