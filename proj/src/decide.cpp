// Branch satisfiability for the three logics, certificates and their
// verifier, measure reconstruction, and total-order extension.
#include "cardcomp/decide.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "cardcomp/lp.hpp"

namespace cardcomp {

std::string logic_name(Logic l) {
    switch (l) {
        case Logic::Fin: return "fin";
        case Logic::Ded: return "ded";
        case Logic::Card: return "card";
    }
    return "card";
}

Logic logic_from_name(const std::string& name) {
    if (name == "fin") return Logic::Fin;
    if (name == "ded") return Logic::Ded;
    if (name == "card") return Logic::Card;
    throw InputError("unknown logic '" + name + "' (expected fin, ded, or card)");
}

// ===========================================================================
// branches
// ===========================================================================

Branch atomize_branch(const std::vector<Literal>& literals, const LabelRegistry& labels) {
    Branch b;
    b.labels = labels;
    for (const auto& lit : literals) {
        BranchLiteral bl;
        bl.positive = lit.positive;
        bl.lhs = atomize(lit.lhs, labels);
        bl.rhs = atomize(lit.rhs, labels);
        bl.source = lit;
        (bl.positive ? b.positives : b.negatives).push_back(b.literals.size());
        b.literals.push_back(std::move(bl));
    }
    return b;
}

std::vector<Premise> Branch::premises() const {
    std::vector<Premise> out;
    out.reserve(positives.size());
    for (std::size_t i : positives) out.emplace_back(literals[i].lhs, literals[i].rhs);
    return out;
}

// ===========================================================================
// derivability: cone membership over the logic's eligible generators
// ===========================================================================

namespace {

struct GenSet {
    std::vector<AtomVector> gens;
    std::vector<std::pair<PremiseKind, std::size_t>> meta;  // parallel to gens

    void add(const AtomSet& left, const AtomSet& right, PremiseKind kind, std::size_t index) {
        AtomVector v = indicator(left);
        v.add(indicator(right), -1);
        gens.push_back(std::move(v));
        meta.emplace_back(kind, index);
    }
};

// Generators eligible for deriving conclusions bounded by `top` (pass the
// whole universe for fin/ded).
GenSet eligible_generators(const Branch& b, Logic logic, const AtomSet& top) {
    GenSet g;
    std::size_t n = b.n_atoms();
    AtomSet empty = AtomSet::none(n);
    for (std::size_t li : b.positives) {
        const BranchLiteral& lit = b.literals[li];
        if (logic == Logic::Card && !lit.lhs.subset_of(top)) continue;
        g.add(lit.lhs, lit.rhs, PremiseKind::PositiveLiteral, li);
    }
    if (logic == Logic::Fin) {
        // A single total measure makes every failed comparison hold reversed.
        for (std::size_t li : b.negatives) {
            const BranchLiteral& lit = b.literals[li];
            g.add(lit.rhs, lit.lhs, PremiseKind::ReversedNegative, li);
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (logic == Logic::Card && !top.test(a)) continue;
        g.add(AtomSet::single(n, a), empty, PremiseKind::AtomPositivity, a);
    }
    return g;
}

AtomVector difference(const AtomSet& plus, const AtomSet& minus) {
    AtomVector v = indicator(plus);
    v.add(indicator(minus), -1);
    return v;
}

}  // namespace

IdealTop closure(const Branch& branch, Logic logic, const AtomSet& f) {
    if (logic != Logic::Card) {
        IdealTop t;
        t.top = AtomSet::all(branch.n_atoms());
        return t;
    }
    std::vector<Premise> prem = branch.premises();
    // Full-strength probe: can y be derived below the current top with the
    // generators eligible there? (The subset sweep already reaches the
    // fixpoint for cone derivability; the probe documents that.)
    DerivabilityProbe probe = [&](const AtomSet& y, const AtomSet& top) {
        GenSet g = eligible_generators(branch, Logic::Card, top);
        return cone_feasible(difference(top, y), g.gens);
    };
    IdealTop t = ideal_top(f, prem, probe);
    // map premise-array pulls to branch literal indices
    for (auto& p : t.pulls) p = branch.positives[p];
    return t;
}

namespace {

// derivability against an already-computed ideal (card) or the full universe
std::optional<CancellationCertificate> derive_in_ideal(const Branch& branch, Logic logic,
                                                       const AtomSet& e, const AtomSet& f,
                                                       const IdealTop& ideal) {
    GenSet g = eligible_generators(branch, logic, ideal.top);
    ConeMembership cm = cone_member(difference(f, e), g.gens);
    if (!cm.member) return std::nullopt;

    CancellationCertificate cert;
    cert.logic = logic;
    cert.conclusion_e = e;
    cert.conclusion_f = f;
    cert.scale = cm.scale;
    for (std::size_t i = 0; i < g.gens.size(); ++i)
        if (cm.multipliers[i] > 0)
            cert.premises.push_back(PremiseUse{g.meta[i].first, g.meta[i].second, cm.multipliers[i]});
    if (logic == Logic::Card) cert.coverage = ideal.pulls;
    return cert;
}

}  // namespace

std::optional<CancellationCertificate> derivable(const Branch& branch, Logic logic,
                                                 const AtomSet& e, const AtomSet& f) {
    IdealTop ideal;
    if (logic == Logic::Card) ideal = closure(branch, logic, f);
    else ideal.top = AtomSet::all(branch.n_atoms());
    return derive_in_ideal(branch, logic, e, f, ideal);
}

// ===========================================================================
// certificate verification (counting only — no solver involved)
// ===========================================================================

bool verify_certificate(const CancellationCertificate& cert, const Branch& branch) {
    std::size_t n = branch.n_atoms();
    if (cert.conclusion_e.universe_size() != n || cert.conclusion_f.universe_size() != n)
        return false;
    if (cert.scale < 1) return false;

    std::vector<std::pair<AtomSet, BigInt>> lefts, rights;
    for (const auto& use : cert.premises) {
        if (use.multiplicity < 1) return false;
        switch (use.kind) {
            case PremiseKind::PositiveLiteral: {
                if (use.index >= branch.literals.size()) return false;
                const BranchLiteral& lit = branch.literals[use.index];
                if (!lit.positive) return false;
                lefts.emplace_back(lit.lhs, use.multiplicity);
                rights.emplace_back(lit.rhs, use.multiplicity);
                break;
            }
            case PremiseKind::ReversedNegative: {
                if (cert.logic != Logic::Fin) return false;
                if (use.index >= branch.literals.size()) return false;
                const BranchLiteral& lit = branch.literals[use.index];
                if (lit.positive) return false;
                lefts.emplace_back(lit.rhs, use.multiplicity);
                rights.emplace_back(lit.lhs, use.multiplicity);
                break;
            }
            case PremiseKind::AtomPositivity: {
                if (use.index >= n) return false;
                lefts.emplace_back(AtomSet::single(n, use.index), use.multiplicity);
                rights.emplace_back(AtomSet::none(n), use.multiplicity);
                break;
            }
        }
    }
    lefts.emplace_back(cert.conclusion_e, cert.scale);
    rights.emplace_back(cert.conclusion_f, cert.scale);
    if (!is_balanced_weighted(lefts, rights)) return false;

    // the conclusion must actually contradict the branch
    if (cert.refutes.has_value()) {
        std::size_t j = *cert.refutes;
        if (j >= branch.literals.size()) return false;
        const BranchLiteral& lit = branch.literals[j];
        if (lit.positive) return false;
        if (!(cert.conclusion_e == lit.rhs && cert.conclusion_f == lit.lhs)) return false;
    } else {
        if (!(cert.conclusion_e == AtomSet::all(n) && cert.conclusion_f == AtomSet::none(n)))
            return false;
    }

    // coverage discipline
    if (cert.logic != Logic::Card) {
        if (!cert.coverage.empty()) return false;
    } else {
        AtomSet top = cert.conclusion_f;
        for (std::size_t step : cert.coverage) {
            if (step >= branch.literals.size()) return false;
            const BranchLiteral& lit = branch.literals[step];
            if (!lit.positive) return false;
            if (!lit.lhs.subset_of(top)) return false;
            top = top | lit.rhs;
        }
        for (const auto& use : cert.premises) {
            if (use.kind == PremiseKind::PositiveLiteral) {
                if (!branch.literals[use.index].lhs.subset_of(top)) return false;
            } else if (use.kind == PremiseKind::AtomPositivity) {
                if (!top.test(use.index)) return false;
            }
        }
    }
    return true;
}

// ===========================================================================
// branch satisfiability
// ===========================================================================

bool branch_satisfied(const MeasuresModel& model, const Branch& branch) {
    for (std::size_t li : branch.positives) {
        const BranchLiteral& lit = branch.literals[li];
        for (const auto& mu : model.measures)
            if (!(mu.of(lit.lhs) >= mu.of(lit.rhs))) return false;
    }
    for (std::size_t li : branch.negatives) {
        const BranchLiteral& lit = branch.literals[li];
        bool witnessed = false;
        for (const auto& mu : model.measures)
            if (mu.of(lit.lhs) < mu.of(lit.rhs)) { witnessed = true; break; }
        if (!witnessed) return false;
    }
    return true;
}

namespace {

// multipliers -> gcd-normalized integers with their common scale
std::pair<std::vector<BigInt>, BigInt> normalize_multipliers(const std::vector<Rational>& ms) {
    BigInt l = 1;
    for (const auto& m : ms)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m));
    std::vector<BigInt> out;
    BigInt g = l;
    for (const auto& m : ms) {
        BigInt v = boost::multiprecision::numerator(m) *
                   (l / boost::multiprecision::denominator(m));
        g = boost::multiprecision::gcd(g, v);
        out.push_back(std::move(v));
    }
    if (g == 0) g = 1;
    for (auto& v : out) v /= g;
    return {std::move(out), l / g};
}

void add_comparison_row(LinSystem& sys, const AtomSet& plus, const AtomSet& minus, Rel rel,
                        Rational constant) {
    std::vector<Rational> row(sys.n_vars, 0);
    for (std::size_t a : plus.to_indices()) row[a] += 1;
    for (std::size_t a : minus.to_indices()) row[a] -= 1;
    sys.add(std::move(row), rel, std::move(constant));
}

Measure measure_from_point(const std::vector<Rational>& point) {
    std::vector<BigInt> ints = integerize(point);
    Measure mu(point.size());
    for (std::size_t a = 0; a < ints.size(); ++a) {
        if (ints[a] < 0) throw Error("negative measure value from the solver (bug)");
        mu.atom_values[a] = ExtNat::of(ints[a]);
    }
    return mu;
}

// Canonical fin certificate for the conclusion |e| <= |f|: a cone search
// over the positives, the reversed negatives (minus the anchored one), and
// atom positivity. `anchor` is the negative literal the conclusion refutes
// (nullopt for the admissibility conclusion |1| <= |0|).
std::optional<CancellationCertificate> fin_conclusion(const Branch& b, const AtomSet& e,
                                                      const AtomSet& f,
                                                      std::optional<std::size_t> anchor) {
    std::size_t n = b.n_atoms();
    GenSet g;
    AtomSet empty = AtomSet::none(n);
    for (std::size_t li : b.positives)
        g.add(b.literals[li].lhs, b.literals[li].rhs, PremiseKind::PositiveLiteral, li);
    for (std::size_t li : b.negatives) {
        if (anchor && *anchor == li) continue;
        g.add(b.literals[li].rhs, b.literals[li].lhs, PremiseKind::ReversedNegative, li);
    }
    for (std::size_t a = 0; a < n; ++a)
        g.add(AtomSet::single(n, a), empty, PremiseKind::AtomPositivity, a);

    ConeMembership cm = cone_member(difference(f, e), g.gens);
    if (!cm.member) return std::nullopt;
    CancellationCertificate cert;
    cert.logic = Logic::Fin;
    cert.conclusion_e = e;
    cert.conclusion_f = f;
    cert.scale = cm.scale;
    for (std::size_t i = 0; i < g.gens.size(); ++i)
        if (cm.multipliers[i] > 0)
            cert.premises.push_back(PremiseUse{g.meta[i].first, g.meta[i].second, cm.multipliers[i]});
    cert.refutes = anchor;
    return cert;
}

BranchOutcome fin_sat_branch(const Branch& b) {
    std::size_t n = b.n_atoms();
    const auto& P = b.positives;
    const auto& N = b.negatives;

    // rows: positives | reversed-strict negatives | atoms | admissibility
    LinSystem sys(n);
    for (std::size_t li : P)
        add_comparison_row(sys, b.literals[li].lhs, b.literals[li].rhs, Rel::Geq, 0);
    for (std::size_t li : N)
        add_comparison_row(sys, b.literals[li].rhs, b.literals[li].lhs, Rel::Geq, 1);
    for (std::size_t a = 0; a < n; ++a)
        sys.add_sparse({{a, Rational(1)}}, Rel::Geq, 0);
    sys.add(std::vector<Rational>(n, 1), Rel::Geq, 1);

    LpResult r = solve(sys);
    BranchOutcome out;
    if (r.feasible) {
        out.sat = true;
        WitnessBundle w;
        w.model.kind = ModelKind::Finitary;
        w.model.labels = b.labels;
        w.model.valuation = MeasuresModel::free_valuation(b.labels);
        w.model.measures.push_back(measure_from_point(r.point));
        w.admissibility_measure = 0;
        for (std::size_t li : N) w.annotations.push_back(WitnessAnnotation{li, 0, false});
        w.model.validate();
        if (!branch_satisfied(w.model, b)) throw Error("fin witness failed re-check (bug)");
        out.witness = std::move(w);
        return out;
    }

    // Infeasible. The Farkas dual guarantees either some negative literal's
    // reversal is derivable from everything else, or the universe is
    // derivably empty. Re-derive canonically (first refutable negative, then
    // the admissibility conclusion) so certificates are pivot-order-free.
    std::optional<CancellationCertificate> cert;
    for (std::size_t li : N) {
        const BranchLiteral& lit = b.literals[li];
        cert = fin_conclusion(b, lit.rhs, lit.lhs, li);
        if (cert) break;
    }
    if (!cert) cert = fin_conclusion(b, AtomSet::all(n), AtomSet::none(n), std::nullopt);
    if (!cert) throw Error("fin system infeasible yet no cancellation conclusion found (bug)");
    if (!verify_certificate(*cert, b)) throw Error("fin certificate failed verification (bug)");
    out.certificates.push_back(std::move(*cert));
    return out;
}

BranchOutcome ded_sat_branch(const Branch& b) {
    std::size_t n = b.n_atoms();
    BranchOutcome out;

    for (std::size_t li : b.negatives) {
        const BranchLiteral& lit = b.literals[li];
        auto cert = derivable(b, Logic::Ded, lit.rhs, lit.lhs);
        if (cert) {
            cert->refutes = li;
            if (!verify_certificate(*cert, b)) throw Error("ded certificate failed verification (bug)");
            out.certificates.push_back(std::move(*cert));
        }
    }
    {
        auto cert = derivable(b, Logic::Ded, AtomSet::all(n), AtomSet::none(n));
        if (cert) {
            cert->refutes = std::nullopt;
            if (!verify_certificate(*cert, b)) throw Error("ded certificate failed verification (bug)");
            out.certificates.push_back(std::move(*cert));
        }
    }
    if (!out.certificates.empty()) return out;

    out.sat = true;
    WitnessBundle w;
    w.model.kind = ModelKind::Finitary;
    w.model.labels = b.labels;
    w.model.valuation = MeasuresModel::free_valuation(b.labels);

    auto base_rows = [&](LinSystem& sys) {
        for (std::size_t li : b.positives)
            add_comparison_row(sys, b.literals[li].lhs, b.literals[li].rhs, Rel::Geq, 0);
        for (std::size_t a = 0; a < n; ++a) sys.add_sparse({{a, Rational(1)}}, Rel::Geq, 0);
    };

    for (std::size_t j = 0; j < b.negatives.size(); ++j) {
        std::size_t li = b.negatives[j];
        LinSystem sys(n);
        base_rows(sys);
        add_comparison_row(sys, b.literals[li].rhs, b.literals[li].lhs, Rel::Geq, 1);
        LpResult r = solve(sys);
        if (!r.feasible) throw Error("underivable comparison yet strict system infeasible (bug)");
        w.model.measures.push_back(measure_from_point(r.point));
        w.annotations.push_back(WitnessAnnotation{li, j, false});
    }
    {
        LinSystem sys(n);
        base_rows(sys);
        sys.add(std::vector<Rational>(n, 1), Rel::Geq, 1);
        LpResult r = solve(sys);
        if (!r.feasible) throw Error("admissibility system infeasible after the emptiness check (bug)");
        w.model.measures.push_back(measure_from_point(r.point));
        w.admissibility_measure = w.model.measures.size() - 1;
    }
    w.model.validate();
    if (!branch_satisfied(w.model, b)) throw Error("ded witness failed re-check (bug)");
    out.witness = std::move(w);
    return out;
}

BranchOutcome card_sat_branch(const Branch& b) {
    std::size_t n = b.n_atoms();
    BranchOutcome out;

    std::vector<IdealTop> neg_ideals(b.negatives.size());
    for (std::size_t j = 0; j < b.negatives.size(); ++j) {
        std::size_t li = b.negatives[j];
        const BranchLiteral& lit = b.literals[li];
        neg_ideals[j] = closure(b, Logic::Card, lit.lhs);
        auto cert = derive_in_ideal(b, Logic::Card, lit.rhs, lit.lhs, neg_ideals[j]);
        if (cert) {
            cert->refutes = li;
            if (!verify_certificate(*cert, b)) throw Error("card certificate failed verification (bug)");
            out.certificates.push_back(std::move(*cert));
        }
    }
    IdealTop empty_ideal = closure(b, Logic::Card, AtomSet::none(n));
    {
        auto cert = derive_in_ideal(b, Logic::Card, AtomSet::all(n), AtomSet::none(n), empty_ideal);
        if (cert) {
            cert->refutes = std::nullopt;
            if (!verify_certificate(*cert, b)) throw Error("card certificate failed verification (bug)");
            out.certificates.push_back(std::move(*cert));
        }
    }
    if (!out.certificates.empty()) return out;

    out.sat = true;
    WitnessBundle w;
    w.model.kind = ModelKind::Infinitary;
    w.model.labels = b.labels;
    w.model.valuation = MeasuresModel::free_valuation(b.labels);

    auto rho_measure = [&](const AtomSet& top) {
        Measure mu(n);
        for (std::size_t a = 0; a < n; ++a)
            mu.atom_values[a] = top.test(a) ? ExtNat::of(0) : ExtNat::inf();
        return mu;
    };

    for (std::size_t j = 0; j < b.negatives.size(); ++j) {
        std::size_t li = b.negatives[j];
        const BranchLiteral& lit = b.literals[li];
        const AtomSet& top = neg_ideals[j].top;
        if (!lit.rhs.subset_of(top)) {
            // the right side escapes the ideal of the left side: size 0 vs
            // infinity separates them
            w.model.measures.push_back(rho_measure(top));
            w.annotations.push_back(WitnessAnnotation{li, j, true});
            continue;
        }
        // both sides inside the ideal: a strict finite measure on the ideal,
        // infinity outside it
        std::vector<std::size_t> local = top.to_indices();
        std::vector<std::size_t> global_to_local(n, static_cast<std::size_t>(-1));
        for (std::size_t k = 0; k < local.size(); ++k) global_to_local[local[k]] = k;
        LinSystem sys(local.size());
        auto local_row = [&](const AtomSet& plus, const AtomSet& minus, Rel rel, Rational c) {
            std::vector<Rational> row(local.size(), 0);
            for (std::size_t a : plus.to_indices()) row[global_to_local[a]] += 1;
            for (std::size_t a : minus.to_indices()) row[global_to_local[a]] -= 1;
            sys.add(std::move(row), rel, std::move(c));
        };
        for (std::size_t pi : b.positives) {
            const BranchLiteral& plit = b.literals[pi];
            if (!plit.lhs.subset_of(top)) continue;
            if (!plit.rhs.subset_of(top))
                throw Error("ideal not closed under an eligible premise (bug)");
            local_row(plit.lhs, plit.rhs, Rel::Geq, 0);
        }
        for (std::size_t k = 0; k < local.size(); ++k)
            sys.add_sparse({{k, Rational(1)}}, Rel::Geq, 0);
        local_row(lit.rhs, lit.lhs, Rel::Geq, 1);
        LpResult r = solve(sys);
        if (!r.feasible) throw Error("underivable comparison yet ideal system infeasible (bug)");
        std::vector<BigInt> ints = integerize(r.point);
        Measure mu(n);
        for (std::size_t a = 0; a < n; ++a) mu.atom_values[a] = ExtNat::inf();
        for (std::size_t k = 0; k < local.size(); ++k) {
            if (ints[k] < 0) throw Error("negative measure value from the solver (bug)");
            mu.atom_values[local[k]] = ExtNat::of(ints[k]);
        }
        w.model.measures.push_back(std::move(mu));
        w.annotations.push_back(WitnessAnnotation{li, j, false});
    }

    if (AtomSet::all(n).subset_of(empty_ideal.top))
        throw Error("universe collapsed into the empty ideal yet no contradiction derived (bug)");
    w.model.measures.push_back(rho_measure(empty_ideal.top));
    w.admissibility_measure = w.model.measures.size() - 1;

    // every positive must hold under every measure (the ideal construction
    // guarantees it; re-check exactly)
    for (std::size_t li : b.positives) {
        const BranchLiteral& lit = b.literals[li];
        for (const auto& mu : w.model.measures)
            if (!(mu.of(lit.lhs) >= mu.of(lit.rhs)))
                throw Error("card witness violates a positive literal (bug)");
    }
    w.model.validate();
    if (!branch_satisfied(w.model, b)) throw Error("card witness failed re-check (bug)");
    out.witness = std::move(w);
    return out;
}

}  // namespace

BranchOutcome sat_branch(const Branch& branch, Logic logic, const Limits& limits) {
    if (branch.labels.size() > limits.max_labels)
        throw LimitExceeded("label count exceeds the limit");
    if (branch.n_atoms() > limits.max_decision_atoms)
        throw LimitExceeded("atom universe too large for the decision procedures");
    switch (logic) {
        case Logic::Fin: return fin_sat_branch(branch);
        case Logic::Ded: return ded_sat_branch(branch);
        case Logic::Card: return card_sat_branch(branch);
    }
    throw Error("unreachable logic");
}

// ===========================================================================
// formula-level SAT / entailment
// ===========================================================================

SatResult sat(const FormulaPtr& formula, Logic logic, const LabelRegistry& labels,
              const Limits& limits) {
    FormulaPtr core = expand_abbreviations(formula);
    std::vector<std::vector<Literal>> dnf = to_dnf(core);
    if (dnf.size() > limits.max_branches)
        throw LimitExceeded("disjunctive normal form exceeds the branch limit");

    SatResult r;
    r.branches.reserve(dnf.size());
    for (const auto& lits : dnf) r.branches.push_back(atomize_branch(lits, labels));
    r.branch_certificates.resize(r.branches.size());

    for (std::size_t i = 0; i < r.branches.size(); ++i) {
        BranchOutcome o = sat_branch(r.branches[i], logic, limits);
        if (o.sat) {
            r.sat = true;
            r.witness_branch = i;
            r.witness = std::move(o.witness);
            return r;
        }
        r.branch_certificates[i] = std::move(o.certificates);
    }
    r.sat = false;
    return r;
}

SatResult entails(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal, Logic logic,
                  const LabelRegistry& labels, const Limits& limits) {
    FormulaPtr acc = mk_not(goal);
    for (auto it = assumptions.rbegin(); it != assumptions.rend(); ++it)
        acc = mk_and(*it, acc);
    return sat(acc, logic, labels, limits);
}

// ===========================================================================
// measure reconstruction from a total preorder
// ===========================================================================

std::variant<Measure, KpsViolation> kps_measure(const TotalOrder& order) {
    if (order.n_atoms > 6) throw LimitExceeded("preorder universe beyond 6 atoms");
    const std::size_t E = std::size_t{1} << order.n_atoms;
    const std::uint32_t full = static_cast<std::uint32_t>(E - 1);

    std::vector<std::uint64_t> geq(E, 0);  // row bitsets
    for (const auto& [a, bb] : order.pairs) {
        if (a >= E || bb >= E) throw DimensionMismatch("element mask out of range");
        geq[a] |= std::uint64_t{1} << bb;
    }
    auto rel = [&](std::uint32_t a, std::uint32_t b) {
        return (geq[a] >> b) & 1;
    };

    auto structural = [&](const std::string& reason, std::uint32_t a, std::uint32_t b) {
        KpsViolation v;
        v.reason = reason;
        v.violated = {a, b};
        return v;
    };

    // non-triviality
    if (rel(0, full))
        return structural("trivial preorder: the empty set dominates the universe", 0, full);
    // positivity
    for (std::uint32_t x = 0; x < E; ++x)
        if (!rel(x, 0))
            return structural("positivity fails: element does not dominate the empty set", x, 0);
    // totality
    for (std::uint32_t x = 0; x < E; ++x)
        for (std::uint32_t y = 0; y < E; ++y)
            if (!rel(x, y) && !rel(y, x))
                return structural("totality fails: incomparable elements", x, y);
    // transitivity
    for (std::uint32_t x = 0; x < E; ++x)
        for (std::uint32_t y = 0; y < E; ++y)
            if (rel(x, y) && (geq[y] & ~geq[x]))
                for (std::uint32_t z = 0; z < E; ++z)
                    if (rel(y, z) && !rel(x, z))
                        return structural("transitivity fails", x, z);

    // representability LP over atom values
    struct RowInfo {
        std::uint32_t a, b;
        bool strict;
    };
    std::vector<RowInfo> info;
    LinSystem sys(order.n_atoms);
    auto mask_row = [&](std::uint32_t plus, std::uint32_t minus, Rel r, Rational c) {
        std::vector<Rational> row(order.n_atoms, 0);
        for (std::size_t k = 0; k < order.n_atoms; ++k) {
            if ((plus >> k) & 1) row[k] += 1;
            if ((minus >> k) & 1) row[k] -= 1;
        }
        sys.add(std::move(row), r, std::move(c));
    };
    for (std::uint32_t x = 0; x < E; ++x)
        for (std::uint32_t y = 0; y < E; ++y) {
            if (x == y) continue;
            if (!rel(x, y)) continue;
            if (rel(y, x)) {
                if (x < y) {  // record each equivalence once
                    mask_row(x, y, Rel::Eq, 0);
                    info.push_back(RowInfo{x, y, false});
                }
            } else {
                mask_row(x, y, Rel::Geq, 1);  // strict: at least one apart
                info.push_back(RowInfo{x, y, true});
            }
        }
    std::size_t atom_rows_at = info.size();
    for (std::size_t k = 0; k < order.n_atoms; ++k)
        sys.add_sparse({{k, Rational(1)}}, Rel::Geq, 0);

    std::vector<Rational> objective(order.n_atoms, 1);
    LpResult r = solve_minimizing(sys, objective);
    if (r.feasible) {
        std::vector<BigInt> ints = integerize(r.point);
        Measure mu(order.n_atoms);
        for (std::size_t k = 0; k < order.n_atoms; ++k) {
            if (ints[k] < 0) throw Error("negative measure value from the solver (bug)");
            mu.atom_values[k] = ExtNat::of(ints[k]);
        }
        return mu;
    }

    // cancellation violated: the dual is a balanced combination of order
    // pairs whose strict members are forced backwards
    KpsViolation v;
    v.reason = "cancellation fails: a balanced combination of the order's pairs forces the reverse of a strict pair";
    std::vector<Rational> used;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> used_pair;  // oriented (left, right)
    std::size_t first_strict = info.size();
    for (std::size_t i = 0; i < info.size(); ++i) {
        Rational lambda = r.dual[i];
        if (lambda == 0) continue;
        if (info[i].strict) {
            if (first_strict == info.size()) first_strict = i;
            used.push_back(lambda);
            used_pair.emplace_back(info[i].a, info[i].b);
        } else if (lambda > 0) {
            used.push_back(lambda);
            used_pair.emplace_back(info[i].a, info[i].b);
        } else {
            used.push_back(-lambda);
            used_pair.emplace_back(info[i].b, info[i].a);
        }
    }
    for (std::size_t k = 0; k < order.n_atoms; ++k) {
        Rational lambda = r.dual[atom_rows_at + k];
        if (lambda > 0) {
            used.push_back(lambda);
            used_pair.emplace_back(std::uint32_t{1} << k, 0);
        }
    }
    auto [ints, scale] = normalize_multipliers(used);
    (void)scale;
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (ints[i] == 0) continue;
        v.left.emplace_back(used_pair[i].first, ints[i]);
        v.right.emplace_back(used_pair[i].second, ints[i]);
    }
    if (first_strict != info.size()) v.violated = {info[first_strict].a, info[first_strict].b};
    return v;
}

// ===========================================================================
// total-order extension
// ===========================================================================

ExtensionResult extend_to_total_order(const std::vector<Premise>& premises, const AtomSet& ideal,
                                      const AtomSet& a, const AtomSet& b) {
    std::vector<std::size_t> atom_map = ideal.to_indices();
    const std::size_t m = atom_map.size();
    if (m > 5) throw LimitExceeded("ideal beyond 5 atoms: subset lattice too large to sweep");
    const std::size_t n = ideal.universe_size();
    if (a.universe_size() != n || b.universe_size() != n)
        throw DimensionMismatch("seed sets over a different universe");
    if (!a.subset_of(ideal) || !b.subset_of(ideal)) throw Error("seed pair outside the ideal");
    const std::uint32_t E = std::uint32_t{1} << m;

    // generators: premises inside the ideal, atom positivity inside the ideal
    std::vector<AtomVector> gens;
    for (const auto& [x, y] : premises) {
        if (!x.subset_of(ideal) || !y.subset_of(ideal)) continue;
        gens.push_back(difference(x, y));
    }
    AtomSet none = AtomSet::none(n);
    for (std::size_t g : atom_map) gens.push_back(difference(AtomSet::single(n, g), none));

    auto to_global = [&](std::uint32_t mask) {
        AtomSet s(n);
        for (std::size_t k = 0; k < m; ++k)
            if ((mask >> k) & 1) s.set(atom_map[k]);
        return s;
    };
    std::vector<AtomSet> elem(E);
    for (std::uint32_t u = 0; u < E; ++u) elem[u] = to_global(u);

    // known relation bits, grown monotonically; cone tests fill the gaps
    std::vector<std::uint64_t> known(E, 0);
    auto mark = [&](std::uint32_t u, std::uint32_t v) { known[u] |= std::uint64_t{1} << v; };
    auto marked = [&](std::uint32_t u, std::uint32_t v) { return (known[u] >> v) & 1; };

    auto derivable_rel = [&](std::uint32_t u, std::uint32_t v) {  // u >= v ?
        if (marked(u, v)) return true;
        if ((v & ~u) == 0) { mark(u, v); return true; }  // subset: atom positivity
        if (cone_member(difference(elem[u], elem[v]), gens).member) {
            mark(u, v);
            return true;
        }
        return false;
    };

    AtomVector seed_target = difference(a, b);
    auto seed_forced = [&]() { return cone_member(seed_target, gens).member; };
    if (seed_forced()) throw SeedDerivable("the seeded comparison is already derivable");

    for (std::uint32_t c = 0; c < E; ++c) {
        for (std::uint32_t dd = c + 1; dd < E; ++dd) {
            bool cd = derivable_rel(c, dd);
            bool dc = derivable_rel(dd, c);
            if (cd || dc) continue;
            gens.push_back(difference(elem[c], elem[dd]));  // try c >= d
            if (seed_forced()) {
                gens.pop_back();
                gens.push_back(difference(elem[dd], elem[c]));  // d >= c instead
                if (seed_forced())
                    throw Error("both orientations force the seed; it was derivable already (bug)");
                mark(dd, c);
            } else {
                mark(c, dd);
            }
        }
    }

    ExtensionResult out;
    out.atom_map = std::move(atom_map);
    out.order.n_atoms = m;
    for (std::uint32_t u = 0; u < E; ++u)
        for (std::uint32_t v = 0; v < E; ++v)
            if (u == v || derivable_rel(u, v)) out.order.pairs.emplace_back(u, v);
    return out;
}

}  // namespace cardcomp
