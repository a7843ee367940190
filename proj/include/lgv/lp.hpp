#pragma once

#include <vector>

#include "lgv/linexpr.hpp"

namespace lgv {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinConstraint {
    std::vector<double> coeffs;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

// Maximization over a box of finite variable bounds plus linear constraints.
// Finite bounds keep every instance bounded, so Unbounded cannot occur.
struct LPProblem {
    std::size_t num_vars = 0;
    std::vector<LinConstraint> constraints;
    LinExpr objective; // maximize
    std::vector<Interval> var_bounds;
};

enum class LPStatus { Optimal, Infeasible };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    double value = 0.0;
    std::vector<double> point;
};

struct FeasibilityResult {
    bool is_feasible = false;
    std::vector<double> point;
};

// Two-phase dense simplex, Bland's rule. Throws LpError past the iteration
// cap (50 * (columns + rows) of the tableau).
LPOutcome solve(const LPProblem& p);

// Phase 1 only: reports feasibility with a witness point.
FeasibilityResult feasible(const LPProblem& p);

} // namespace lgv
