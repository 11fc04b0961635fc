// Exact rational linear feasibility with Farkas infeasibility certificates.
//
// Systems are lists of rows  coeffs . x  REL  const  with REL in {>=, =, >}
// over free rational variables. The solver runs a dense phase-1 simplex with
// Bland's rule (exact arithmetic, no cycling); strict rows are handled by one
// shared slack variable eps with eps >= 1 — sound and complete here because
// every system the callers build is homogeneous in x, so feasibility is
// invariant under positive scaling.
//
// Feasible results carry a point that satisfies every row exactly.
// Infeasible results carry one multiplier per caller row with
//     sum_i dual_i * coeffs_i = 0        (componentwise over variables)
//     sum_i dual_i * (const_i + strict_i) > 0   (strict_i = 1 on '>' rows)
//     dual_i >= 0 on '>=' and '>' rows (signed on '=' rows),
// re-verified exactly before returning.
//
// An independent Fourier-Motzkin engine cross-checks every verdict on small
// systems (it is exponential, so only up to a variable cap).
#pragma once

#include <optional>
#include <vector>

#include "cardcomp/basics.hpp"

namespace cardcomp {

enum class Rel { Geq, Eq, Gt };

struct LinRow {
    std::vector<Rational> coeffs;
    Rel rel = Rel::Geq;
    Rational constant = 0;
};

struct LinSystem {
    std::size_t n_vars = 0;
    std::vector<LinRow> rows;

    explicit LinSystem(std::size_t vars = 0) : n_vars(vars) {}
    void add(std::vector<Rational> coeffs, Rel rel, Rational constant);
    // sparse helper: pairs (var, coeff)
    void add_sparse(const std::vector<std::pair<std::size_t, Rational>>& entries, Rel rel,
                    Rational constant);
};

struct LpResult {
    bool feasible = false;
    std::vector<Rational> point;  // n_vars values, empty when infeasible
    std::vector<Rational> dual;   // one per row, empty when feasible
};

// Feasibility only.
LpResult solve(const LinSystem& sys);

// Feasibility plus, on feasible systems, minimization of objective . x.
// pre: the objective is bounded below on the feasible region (true for the
// uses here: nonnegative combinations of nonnegative variables).
LpResult solve_minimizing(const LinSystem& sys, const std::vector<Rational>& objective);

// Smallest positive integer scaling: values * (lcm of denominators).
std::vector<BigInt> integerize(const std::vector<Rational>& values);

// Independent exact feasibility check by variable elimination.
bool fourier_motzkin_feasible(const LinSystem& sys);

// Variable-count cap up to which solve() cross-checks itself against
// Fourier-Motzkin on every call.
inline constexpr std::size_t kCrossCheckMaxVars = 8;

}  // namespace cardcomp
