// Measures-model semantics implementation.
#include "cardcomp/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cardcomp {

// ===========================================================================
// ExtNat
// ===========================================================================

ExtNat ExtNat::of(BigInt v) {
    if (v < 0) throw Error("extended natural cannot be negative");
    return ExtNat{false, std::move(v)};
}

ExtNat ExtNat::operator+(const ExtNat& o) const {
    if (infinite || o.infinite) return inf();
    return ExtNat{false, value + o.value};
}

bool ExtNat::operator==(const ExtNat& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return value == o.value;
}

bool ExtNat::operator<(const ExtNat& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
}

std::string ExtNat::to_string() const { return infinite ? "inf" : value.str(); }

// ===========================================================================
// Measure / model
// ===========================================================================

ExtNat Measure::of(const AtomSet& s) const {
    if (s.universe_size() != atom_values.size())
        throw DimensionMismatch("measure and set over different universes");
    ExtNat acc = ExtNat::of(0);
    for (std::size_t a = 0; a < atom_values.size(); ++a)
        if (s.test(a)) acc = acc + atom_values[a];
    return acc;
}

bool Measure::all_finite() const {
    for (const auto& v : atom_values)
        if (v.infinite) return false;
    return true;
}

std::vector<AtomSet> MeasuresModel::free_valuation(const LabelRegistry& labels) {
    std::size_t n_atoms = std::size_t{1} << labels.size();
    std::vector<AtomSet> v;
    v.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        AtomSet s(n_atoms);
        for (std::size_t a = 0; a < n_atoms; ++a)
            if ((a >> i) & 1) s.set(a);
        v.push_back(std::move(s));
    }
    return v;
}

void MeasuresModel::validate() const {
    if (valuation.size() != labels.size())
        throw Error("model valuation must assign every label");
    for (const auto& s : valuation)
        if (s.universe_size() != n_atoms())
            throw DimensionMismatch("valuation set over the wrong universe");
    if (measures.empty()) throw Error("model needs at least one measure");
    AtomSet whole = AtomSet::all(n_atoms());
    bool admissible = false;
    for (const auto& mu : measures) {
        if (mu.universe_size() != n_atoms())
            throw DimensionMismatch("measure over the wrong universe");
        if (kind == ModelKind::Finitary && !mu.all_finite())
            throw Error("finitary model contains an infinite measure value");
        if (mu.of(whole) >= ExtNat::of(1)) admissible = true;
    }
    if (!admissible) throw Error("inadmissible model: every measure vanishes on the universe");
}

AtomSet eval_term(const MeasuresModel& m, const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Label: {
            std::size_t i = m.labels.index_of(t->label);
            if (i == LabelRegistry::npos) throw UnknownLabel(t->label);
            return m.valuation[i];
        }
        case TermKind::EmptyConst: return AtomSet::none(m.n_atoms());
        case TermKind::FullConst: return AtomSet::all(m.n_atoms());
        case TermKind::Complement: return ~eval_term(m, t->a);
        case TermKind::Intersection: return eval_term(m, t->a) & eval_term(m, t->b);
        case TermKind::Union: return eval_term(m, t->a) | eval_term(m, t->b);
    }
    throw Error("unreachable term kind");
}

bool eval_formula(const MeasuresModel& m, const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::Geq: {
            AtomSet s = eval_term(m, f->s), t = eval_term(m, f->t);
            for (const auto& mu : m.measures)
                if (!(mu.of(s) >= mu.of(t))) return false;
            return true;
        }
        case FormulaKind::Not: return !eval_formula(m, f->f);
        case FormulaKind::And: return eval_formula(m, f->f) && eval_formula(m, f->g);
        case FormulaKind::Or: return eval_formula(m, f->f) || eval_formula(m, f->g);
        case FormulaKind::Implies: return !eval_formula(m, f->f) || eval_formula(m, f->g);
        case FormulaKind::Iff: return eval_formula(m, f->f) == eval_formula(m, f->g);
        case FormulaKind::Xor: return eval_formula(m, f->f) != eval_formula(m, f->g);
    }
    throw Error("unreachable formula kind");
}

bool model_satisfies(const MeasuresModel& m, const std::vector<FormulaPtr>& formulas) {
    for (const auto& f : formulas)
        if (!eval_formula(m, f)) return false;
    return true;
}

// ===========================================================================
// random_model
// ===========================================================================

MeasuresModel random_model(const LabelRegistry& labels, ModelKind kind, std::uint64_t seed,
                           const RandomModelBounds& bounds) {
    if (bounds.max_measures < 1 || bounds.max_value < 1)
        throw Error("random model bounds must be positive");
    Rng rng(seed);
    MeasuresModel m;
    m.kind = kind;
    m.labels = labels;
    m.valuation = MeasuresModel::free_valuation(labels);
    std::size_t n_atoms = m.n_atoms();
    AtomSet whole = AtomSet::all(n_atoms);

    for (int attempt = 0; attempt < 64; ++attempt) {
        m.measures.clear();
        std::size_t count = 1 + static_cast<std::size_t>(rng.below(bounds.max_measures));
        for (std::size_t i = 0; i < count; ++i) {
            Measure mu(n_atoms);
            for (std::size_t a = 0; a < n_atoms; ++a) {
                if (kind == ModelKind::Infinitary && rng.chance_percent(bounds.infinity_percent))
                    mu.atom_values[a] = ExtNat::inf();
                else
                    mu.atom_values[a] = ExtNat::of(BigInt(rng.below(bounds.max_value + 1)));
            }
            m.measures.push_back(std::move(mu));
        }
        for (const auto& mu : m.measures)
            if (mu.of(whole) >= ExtNat::of(1)) {
                m.validate();
                return m;
            }
    }
    // Vanishingly unlikely fallback: force admissibility deterministically.
    m.measures[0].atom_values[0] = ExtNat::of(1);
    m.validate();
    return m;
}

// ===========================================================================
// brute_force_sat
// ===========================================================================

namespace {

struct PoolEntry {
    std::vector<std::uint32_t> value_idx;  // per atom, index into the value list
    std::uint64_t refutes = 0;             // bit j: makes negative literal j strict-reverse true
    bool admissible = false;
};

}  // namespace

std::optional<MeasuresModel> brute_force_sat(const std::vector<Literal>& conjunction,
                                             const LabelRegistry& labels, ModelKind kind,
                                             const OracleBounds& bounds) {
    if (bounds.max_measures < 1) throw Error("oracle needs max_measures >= 1");
    std::size_t n_atoms = std::size_t{1} << labels.size();

    // value domain
    std::vector<ExtNat> domain;
    for (std::uint64_t v = 0; v <= bounds.max_value; ++v) domain.push_back(ExtNat::of(BigInt(v)));
    if (kind == ModelKind::Infinitary) domain.push_back(ExtNat::inf());
    const std::size_t V = domain.size();

    // search-space guard: V^n_atoms single measures
    double space = 1;
    for (std::size_t a = 0; a < n_atoms; ++a) {
        space *= static_cast<double>(V);
        if (space > static_cast<double>(bounds.step_budget))
            throw BoundsTooLarge("single-measure space exceeds the step budget");
    }

    std::vector<std::pair<AtomSet, AtomSet>> positives, negatives;
    for (const auto& lit : conjunction) {
        auto pair = std::make_pair(atomize(lit.lhs, labels), atomize(lit.rhs, labels));
        (lit.positive ? positives : negatives).push_back(std::move(pair));
    }
    if (negatives.size() > 62) throw BoundsTooLarge("too many negative literals to track");

    AtomSet whole = AtomSet::all(n_atoms);
    std::uint64_t steps = 0;
    auto step = [&]() {
        if (++steps > bounds.step_budget) throw BoundsTooLarge("step budget exhausted");
    };

    // Enumerate the pool of single measures that satisfy all positive
    // literals, in canonical (odometer, atom 0 slowest) order.
    std::vector<PoolEntry> pool;
    std::vector<std::uint32_t> idx(n_atoms, 0);
    Measure mu(n_atoms);
    for (;;) {
        step();
        for (std::size_t a = 0; a < n_atoms; ++a) mu.atom_values[a] = domain[idx[a]];
        bool ok = true;
        for (const auto& [x, y] : positives)
            if (!(mu.of(x) >= mu.of(y))) { ok = false; break; }
        if (ok) {
            PoolEntry e;
            e.value_idx = idx;
            for (std::size_t j = 0; j < negatives.size(); ++j)
                if (mu.of(negatives[j].first) < mu.of(negatives[j].second))
                    e.refutes |= std::uint64_t{1} << j;
            e.admissible = mu.of(whole) >= ExtNat::of(1);
            pool.push_back(std::move(e));
        }
        // odometer: last atom fastest
        std::size_t a = n_atoms;
        while (a > 0) {
            --a;
            if (++idx[a] < V) break;
            idx[a] = 0;
            if (a == 0) goto pool_done;
        }
        if (n_atoms == 0) break;  // single empty tuple
    }
pool_done:;

    const std::uint64_t all_neg = negatives.empty() ? 0 : (~std::uint64_t{0} >> (64 - negatives.size()));

    // Coverage types and reachable unions for pruning.
    std::set<std::pair<std::uint64_t, bool>> type_set;
    for (const auto& e : pool) type_set.insert({e.refutes, e.admissible});
    std::vector<std::set<std::pair<std::uint64_t, bool>>> reach(bounds.max_measures + 1);
    reach[1] = type_set;
    for (std::size_t r = 2; r <= bounds.max_measures; ++r) {
        reach[r] = reach[r - 1];
        for (const auto& [m1, a1] : reach[r - 1])
            for (const auto& [m2, a2] : type_set) {
                step();
                reach[r].insert({m1 | m2, a1 || a2});
            }
    }
    auto coverable = [&](std::uint64_t need, bool need_adm, std::size_t slots) {
        if (need == 0 && !need_adm) return true;
        if (slots == 0) return false;
        for (const auto& [m, a] : reach[std::min(slots, bounds.max_measures)])
            if ((m & need) == need && (a || !need_adm)) return true;
        return false;
    };

    // min pool index satisfying a (need, adm) pair, memoized
    std::map<std::pair<std::uint64_t, bool>, std::size_t> first_fit;
    auto find_first = [&](std::uint64_t need, bool need_adm) -> std::size_t {
        auto key = std::make_pair(need, need_adm);
        auto it = first_fit.find(key);
        if (it != first_fit.end()) return it->second;
        std::size_t found = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            step();
            if ((pool[i].refutes & need) == need && (pool[i].admissible || !need_adm)) {
                found = i;
                break;
            }
        }
        first_fit.emplace(key, found);
        return found;
    };

    std::vector<std::size_t> chosen;
    std::function<bool(std::uint64_t, bool, std::size_t)> dfs =
        [&](std::uint64_t need, bool need_adm, std::size_t slots) -> bool {
        if (slots == 1) {
            std::size_t i = find_first(need, need_adm);
            if (i == pool.size()) return false;
            chosen.push_back(i);
            return true;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            step();
            std::uint64_t need2 = need & ~pool[i].refutes;
            bool adm2 = need_adm && !pool[i].admissible;
            if (!coverable(need2, adm2, slots - 1)) continue;
            chosen.push_back(i);
            if (dfs(need2, adm2, slots - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t m_count = 1; m_count <= bounds.max_measures; ++m_count) {
        chosen.clear();
        if (!coverable(all_neg, true, m_count)) continue;
        if (dfs(all_neg, true, m_count)) {
            MeasuresModel model;
            model.kind = kind;
            model.labels = labels;
            model.valuation = MeasuresModel::free_valuation(labels);
            for (std::size_t i : chosen) {
                Measure chosen_mu(n_atoms);
                for (std::size_t a = 0; a < n_atoms; ++a)
                    chosen_mu.atom_values[a] = domain[pool[i].value_idx[a]];
                model.measures.push_back(std::move(chosen_mu));
            }
            model.validate();
            return model;
        }
    }
    return std::nullopt;
}

// ===========================================================================
// symbolic_zf_witness
// ===========================================================================

SymbolicZfWitness symbolic_zf_witness(const MeasuresModel& m) {
    SymbolicZfWitness w;
    for (std::size_t i = 0; i < m.measures.size(); ++i)
        w.family_names.push_back("A_" + std::to_string(i + 1));

    std::string text;
    text += "Permutation-model witness over ";
    text += std::to_string(m.measures.size());
    text += m.measures.size() == 1 ? " amorphous urelement family:\n" : " disjoint amorphous urelement families:\n";
    for (const auto& name : w.family_names)
        text += "  " + name + ": an amorphous set of urelements\n";
    text += "Label interpretations (disjoint unions of copies):\n";

    for (std::size_t li = 0; li < m.labels.size(); ++li) {
        const std::string& label = m.labels.name(li);
        const AtomSet& set = m.valuation[li];
        std::string expr;
        bool ded_infinite = false;
        for (std::size_t i = 0; i < m.measures.size(); ++i) {
            ExtNat c = m.measures[i].of(set);
            if (!expr.empty()) expr += " u ";
            if (c.infinite) {
                expr += "omega*" + w.family_names[i];
                ded_infinite = true;
            } else {
                expr += c.value.str() + "*" + w.family_names[i];
            }
        }
        if (expr.empty()) expr = "0";
        w.label_sets.emplace_back(label, expr);
        text += "  " + label + "* = " + expr;
        if (ded_infinite) text += "   (Dedekind-infinite)";
        text += "\n";
    }

    w.comparison_rule =
        "|E*| <= |F*| holds exactly when every measure gives E at most the value of F; "
        "k*A and l*A compare by k <= l, and omega*A dominates every finite multiple of A.";
    text += w.comparison_rule;
    text += "\n";
    w.text = std::move(text);
    return w;
}

}  // namespace cardcomp
