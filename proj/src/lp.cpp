// Dense exact-rational simplex (phase 1 + optional phase 2) and a
// Fourier-Motzkin elimination engine used as an independent cross-check.
#include "cardcomp/lp.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace cardcomp {

void LinSystem::add(std::vector<Rational> coeffs, Rel rel, Rational constant) {
    if (coeffs.size() != n_vars) throw DimensionMismatch("row width differs from variable count");
    rows.push_back(LinRow{std::move(coeffs), rel, std::move(constant)});
}

void LinSystem::add_sparse(const std::vector<std::pair<std::size_t, Rational>>& entries, Rel rel,
                           Rational constant) {
    std::vector<Rational> coeffs(n_vars, 0);
    for (const auto& [v, c] : entries) {
        if (v >= n_vars) throw DimensionMismatch("variable index out of range");
        coeffs[v] += c;
    }
    rows.push_back(LinRow{std::move(coeffs), rel, std::move(constant)});
}

namespace {

// ---------------------------------------------------------------------------
// Tableau simplex.
//
// Internal standard form: every caller variable x_j splits into p_j - q_j
// (both >= 0); one shared eps >= 0 turns each strict row  a.x > c  into
// a.x - eps >= c  together with the internal row  eps >= 1; every inequality
// gets a surplus; rows are scaled to nonnegative right-hand sides; phase 1
// starts from an all-artificial basis and minimizes the artificial sum.
// ---------------------------------------------------------------------------

struct Tableau {
    std::size_t m = 0;                        // rows
    std::size_t cols = 0;                     // structural + surplus + artificial
    std::size_t first_artificial = 0;         // columns >= this are artificial
    std::vector<std::vector<Rational>> tab;   // m x (cols + 1), last = rhs
    std::vector<std::size_t> basis;           // basic column per row

    // Bland pivoting to optimality of cost c (size cols, artificial part
    // included). Artificial columns never enter. Returns false if the
    // objective is unbounded below.
    bool minimize(const std::vector<Rational>& cost) {
        // reduced costs d_j = c_j - c_B . tab_col_j ; d_rhs = - c_B . rhs
        std::vector<Rational> d(cols + 1, 0);
        for (std::size_t j = 0; j <= cols; ++j) {
            Rational acc = j < cols ? cost[j] : Rational(0);
            for (std::size_t i = 0; i < m; ++i) {
                const Rational& cb = cost[basis[i]];
                if (cb != 0) acc -= cb * tab[i][j];
            }
            d[j] = acc;
        }
        for (;;) {
            // entering: lowest-index non-artificial column with d_j < 0
            std::size_t enter = cols;
            for (std::size_t j = 0; j < first_artificial; ++j)
                if (d[j] < 0) { enter = j; break; }
            if (enter == cols) return true;  // optimal

            // leaving: min ratio, ties by lowest basic column index
            std::size_t leave = m;
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (tab[i][enter] <= 0) continue;
                Rational ratio = tab[i][cols] / tab[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return false;  // unbounded
            pivot(leave, enter, d);
        }
    }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& d) {
        // work only on the pivot row's nonzero columns: zero entries stay
        // zero under division and contribute nothing to the updates
        Rational p = tab[r][c];
        std::vector<std::size_t> live;
        live.reserve(cols + 1);
        for (std::size_t j = 0; j <= cols; ++j) {
            if (tab[r][j] == 0) continue;
            tab[r][j] /= p;
            live.push_back(j);
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || tab[i][c] == 0) continue;
            Rational f = tab[i][c];
            for (std::size_t j : live) tab[i][j] -= f * tab[r][j];
        }
        if (d[c] != 0) {
            Rational f = d[c];
            for (std::size_t j : live) d[j] -= f * tab[r][j];
        }
        basis[r] = c;
    }
};

struct Standardized {
    Tableau t;
    std::size_t n_caller_vars = 0;
    bool has_eps = false;
    std::size_t eps_col = 0;            // valid when has_eps
    std::vector<int> row_sign;          // +1 / -1 per internal row (rhs scaling)
    std::vector<std::size_t> caller_row;  // internal row -> caller row (npos for eps row)
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Standardized standardize(const LinSystem& sys) {
    Standardized out;
    out.n_caller_vars = sys.n_vars;
    for (const auto& r : sys.rows)
        if (r.rel == Rel::Gt) { out.has_eps = true; break; }

    std::size_t n_struct = 2 * sys.n_vars + (out.has_eps ? 1 : 0);
    out.eps_col = 2 * sys.n_vars;
    std::size_t n_surplus = 0;
    for (const auto& r : sys.rows)
        if (r.rel != Rel::Eq) ++n_surplus;
    if (out.has_eps) ++n_surplus;  // eps >= 1 row

    std::size_t m = sys.rows.size() + (out.has_eps ? 1 : 0);
    Tableau& t = out.t;
    t.m = m;
    t.first_artificial = n_struct + n_surplus;
    t.cols = t.first_artificial + m;
    t.tab.assign(m, std::vector<Rational>(t.cols + 1, 0));
    t.basis.assign(m, 0);
    out.row_sign.assign(m, 1);
    out.caller_row.assign(m, Standardized::npos);

    std::size_t surplus_at = n_struct;
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = t.tab[i];
        Rational rhs;
        bool has_surplus;
        if (i < sys.rows.size()) {
            const LinRow& src = sys.rows[i];
            out.caller_row[i] = i;
            for (std::size_t j = 0; j < sys.n_vars; ++j) {
                row[2 * j] = src.coeffs[j];
                row[2 * j + 1] = -src.coeffs[j];
            }
            if (src.rel == Rel::Gt) row[out.eps_col] = -1;
            rhs = src.constant;
            has_surplus = src.rel != Rel::Eq;
        } else {
            row[out.eps_col] = 1;  // eps >= 1
            rhs = 1;
            has_surplus = true;
        }
        if (has_surplus) row[surplus_at++] = -1;
        if (rhs < 0) {
            out.row_sign[i] = -1;
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        row[t.cols] = rhs;
        row[t.first_artificial + i] = 1;
        t.basis[i] = t.first_artificial + i;
    }
    return out;
}

// Caller-row Farkas multipliers from the phase-1 optimum; empty if the
// verification identities fail (they never should).
std::vector<Rational> extract_dual(const LinSystem& sys, const Standardized& s) {
    // y_i = 1 - (reduced cost of artificial i) at the phase-1 optimum; with
    // the artificial columns untouched by pivots of other rows this equals
    // 1 - d_art_i. Recompute d for the phase-1 cost directly.
    const Tableau& t = s.t;
    std::vector<Rational> dual(sys.rows.size(), 0);
    for (std::size_t i = 0; i < t.m; ++i) {
        // reduced cost of artificial column i under phase-1 cost
        Rational d = 1;
        for (std::size_t r = 0; r < t.m; ++r) {
            bool basic_is_artificial = t.basis[r] >= t.first_artificial;
            Rational cb = basic_is_artificial ? 1 : 0;
            if (cb != 0) d -= cb * t.tab[r][t.first_artificial + i];
        }
        Rational y = 1 - d;
        if (s.caller_row[i] != Standardized::npos)
            dual[s.caller_row[i]] = Rational(s.row_sign[i]) * y;
    }

    // verify:  sum_i dual_i * coeffs_i = 0  and  sum_i dual_i*(c_i+strict_i) > 0
    for (std::size_t j = 0; j < sys.n_vars; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < sys.rows.size(); ++i) acc += dual[i] * sys.rows[i].coeffs[j];
        if (acc != 0) return {};
    }
    Rational gap = 0;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const LinRow& r = sys.rows[i];
        if (r.rel != Rel::Eq && dual[i] < 0) return {};
        gap += dual[i] * (r.constant + (r.rel == Rel::Gt ? 1 : 0));
    }
    if (gap <= 0) return {};
    return dual;
}

bool point_satisfies(const LinSystem& sys, const std::vector<Rational>& x) {
    for (const auto& r : sys.rows) {
        Rational v = 0;
        for (std::size_t j = 0; j < sys.n_vars; ++j) v += r.coeffs[j] * x[j];
        switch (r.rel) {
            case Rel::Geq: if (!(v >= r.constant)) return false; break;
            case Rel::Eq:  if (!(v == r.constant)) return false; break;
            case Rel::Gt:  if (!(v > r.constant)) return false; break;
        }
    }
    return true;
}

LpResult solve_impl(const LinSystem& sys, const std::vector<Rational>* objective) {
    Standardized s = standardize(sys);
    Tableau& t = s.t;

    std::vector<Rational> phase1_cost(t.cols, 0);
    for (std::size_t j = t.first_artificial; j < t.cols; ++j) phase1_cost[j] = 1;
    if (!t.minimize(phase1_cost)) throw Error("phase-1 objective unbounded (bug)");

    Rational artificial_sum = 0;
    for (std::size_t i = 0; i < t.m; ++i)
        if (t.basis[i] >= t.first_artificial) artificial_sum += t.tab[i][t.cols];

    LpResult res;
    if (artificial_sum > 0) {
        res.feasible = false;
        res.dual = extract_dual(sys, s);
        if (res.dual.empty()) throw Error("Farkas certificate failed verification (bug)");
        return res;
    }

    if (objective) {
        // Pivot any degenerate basic artificial out so phase 2 never moves it.
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.basis[i] < t.first_artificial) continue;
            std::size_t j = 0;
            for (; j < t.first_artificial; ++j)
                if (t.tab[i][j] != 0) break;
            if (j < t.first_artificial) {
                std::vector<Rational> dummy(t.cols + 1, 0);
                t.pivot(i, j, dummy);
            }
            // else: redundant zero row; harmless to leave (its artificial
            // stays basic at value 0 and no entering column touches it).
        }
        std::vector<Rational> cost(t.cols, 0);
        for (std::size_t j = 0; j < sys.n_vars; ++j) {
            cost[2 * j] = (*objective)[j];
            cost[2 * j + 1] = -(*objective)[j];
        }
        if (!t.minimize(cost)) throw Error("objective unbounded below");
    }

    std::vector<Rational> z(t.cols, 0);
    for (std::size_t i = 0; i < t.m; ++i) z[t.basis[i]] = t.tab[i][t.cols];
    res.feasible = true;
    res.point.resize(sys.n_vars);
    for (std::size_t j = 0; j < sys.n_vars; ++j) res.point[j] = z[2 * j] - z[2 * j + 1];
    if (!point_satisfies(sys, res.point)) throw Error("solution failed exact re-check (bug)");
    return res;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fourier-Motzkin
// ---------------------------------------------------------------------------

namespace {

struct FmRow {
    std::vector<Rational> coeffs;  // a . x  REL  c
    Rel rel;
    Rational constant;
};

// Scale to a primitive integer vector with deterministic sign; used to dedup.
void normalize_row(FmRow& r) {
    BigInt num_lcm = 1;
    auto fold = [&](const Rational& q) {
        BigInt den = boost::multiprecision::denominator(q);
        num_lcm = boost::multiprecision::lcm(num_lcm, den);
    };
    for (const auto& c : r.coeffs) fold(c);
    fold(r.constant);
    BigInt g = 0;
    auto scaled = [&](const Rational& q) {
        return boost::multiprecision::numerator(q) * (num_lcm / boost::multiprecision::denominator(q));
    };
    for (const auto& c : r.coeffs) g = boost::multiprecision::gcd(g, scaled(c));
    g = boost::multiprecision::gcd(g, scaled(r.constant));
    if (g == 0) return;
    Rational scale = Rational(num_lcm) / Rational(g);
    for (auto& c : r.coeffs) c *= scale;
    r.constant *= scale;
}

}  // namespace

bool fourier_motzkin_feasible(const LinSystem& sys) {
    std::vector<FmRow> rows;
    rows.reserve(sys.rows.size());
    for (const auto& r : sys.rows) rows.push_back(FmRow{r.coeffs, r.rel, r.constant});

    for (std::size_t var = 0; var < sys.n_vars; ++var) {
        // Prefer eliminating by an equality pivot when one mentions the var.
        std::size_t eq_pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].rel == Rel::Eq && rows[i].coeffs[var] != 0) { eq_pivot = i; break; }

        std::vector<FmRow> next;
        if (eq_pivot != rows.size()) {
            FmRow piv = rows[eq_pivot];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == eq_pivot) continue;
                FmRow r = rows[i];
                if (r.coeffs[var] != 0) {
                    Rational f = r.coeffs[var] / piv.coeffs[var];
                    for (std::size_t j = 0; j < r.coeffs.size(); ++j)
                        r.coeffs[j] -= f * piv.coeffs[j];
                    r.constant -= f * piv.constant;
                }
                next.push_back(std::move(r));
            }
        } else {
            std::vector<std::size_t> pos, neg;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].coeffs[var] > 0) pos.push_back(i);
                else if (rows[i].coeffs[var] < 0) neg.push_back(i);
                else next.push_back(rows[i]);
            }
            for (std::size_t ip : pos) {
                for (std::size_t in : neg) {
                    const FmRow& p = rows[ip];
                    const FmRow& n = rows[in];
                    FmRow combined;
                    combined.coeffs.resize(sys.n_vars);
                    Rational cp = -n.coeffs[var];  // > 0
                    Rational cn = p.coeffs[var];   // > 0
                    for (std::size_t j = 0; j < sys.n_vars; ++j)
                        combined.coeffs[j] = cp * p.coeffs[j] + cn * n.coeffs[j];
                    combined.constant = cp * p.constant + cn * n.constant;
                    combined.rel = (p.rel == Rel::Gt || n.rel == Rel::Gt) ? Rel::Gt : Rel::Geq;
                    next.push_back(std::move(combined));
                }
            }
        }

        // Drop variable-free satisfied rows, detect contradictions early,
        // dedup the rest (keeping the tighter bound per direction).
        std::map<std::pair<std::vector<Rational>, int>, Rational> strongest;
        for (auto& r : next) {
            bool allzero = true;
            for (const auto& c : r.coeffs)
                if (c != 0) { allzero = false; break; }
            if (allzero) {
                switch (r.rel) {
                    case Rel::Geq: if (r.constant > 0) return false; break;
                    case Rel::Gt:  if (r.constant >= 0) return false; break;
                    case Rel::Eq:  if (r.constant != 0) return false; break;
                }
                continue;
            }
            normalize_row(r);
            auto key = std::make_pair(r.coeffs, static_cast<int>(r.rel));
            auto it = strongest.find(key);
            if (it == strongest.end()) {
                strongest.emplace(std::move(key), r.constant);
            } else if (r.rel == Rel::Eq) {
                if (r.constant != it->second) return false;  // a.x = c1 and = c2
            } else if (r.constant > it->second) {
                it->second = r.constant;
            }
        }
        rows.clear();
        for (auto& [key, c] : strongest)
            rows.push_back(FmRow{key.first, static_cast<Rel>(key.second), c});
        if (rows.size() > 20000) throw LimitExceeded("fourier-motzkin row blowup");
    }

    for (const auto& r : rows) {
        switch (r.rel) {
            case Rel::Geq: if (r.constant > 0) return false; break;
            case Rel::Gt:  if (r.constant >= 0) return false; break;
            case Rel::Eq:  if (r.constant != 0) return false; break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

namespace {

void maybe_cross_check(const LinSystem& sys, bool feasible) {
    if (sys.n_vars > kCrossCheckMaxVars) return;
    bool fm;
    try {
        fm = fourier_motzkin_feasible(sys);
    } catch (const LimitExceeded&) {
        return;  // blowup: skip the check rather than fail the solve
    }
    if (fm != feasible) throw Error("solver cross-check disagreement (bug)");
}

}  // namespace

LpResult solve(const LinSystem& sys) {
    LpResult r = solve_impl(sys, nullptr);
    maybe_cross_check(sys, r.feasible);
    return r;
}

LpResult solve_minimizing(const LinSystem& sys, const std::vector<Rational>& objective) {
    if (objective.size() != sys.n_vars)
        throw DimensionMismatch("objective width differs from variable count");
    LpResult r = solve_impl(sys, &objective);
    maybe_cross_check(sys, r.feasible);
    return r;
}

std::vector<BigInt> integerize(const std::vector<Rational>& values) {
    BigInt l = 1;
    for (const auto& v : values)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(boost::multiprecision::numerator(v) *
                      (l / boost::multiprecision::denominator(v)));
    return out;
}

}  // namespace cardcomp
