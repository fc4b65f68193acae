#ifndef ROCUT_LP_SOLVER_HPP
#define ROCUT_LP_SOLVER_HPP

#include <vector>

#include "rocut/linalg.hpp"

namespace rocut {

/// One linear row, coeffs^T x <= rhs.
struct LinearRow {
    Vector coeffs;
    double rhs = 0.0;
};

/// min c^T x subject to rows and a finite box.
struct LinearProgram {
    Vector c;
    std::vector<LinearRow> rows;
    Vector lower;
    Vector upper;
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vector x;               ///< present iff Optimal
    double objective = 0.0; ///< present iff Optimal
};

/// Simplex tolerances, centralized. Bland's rule engages after
/// `degenerate_limit` consecutive degenerate pivots.
struct SimplexTolerances {
    double reduced_cost = 1e-9;
    double pivot = 1e-10;
    double row_feasibility = 1e-8;
    int degenerate_limit = 100;
    long max_pivots = 200000;
};

/// Bounded-variable primal simplex, phase-1/phase-2. Returns a vertex
/// of the feasible polytope when Optimal. Unboundedness cannot occur
/// (the box is finite); throws NumericalBreakdown when pivoting
/// degenerates beyond the anti-cycling budget.
LpSolution solve_lp(const LinearProgram& lp,
                    const SimplexTolerances& tol = SimplexTolerances{});

} // namespace rocut

#endif
