#ifndef ROCUT_MILP_SOLVER_HPP
#define ROCUT_MILP_SOLVER_HPP

#include <vector>

#include "rocut/lp_solver.hpp"

namespace rocut {

enum class MasterStatus { Optimal, Infeasible };

struct MasterSolution {
    MasterStatus status = MasterStatus::Infeasible;
    Vector x;
    double objective = 0.0;
    long nodes_explored = 0;
};

struct MilpOptions {
    long node_limit = 100000;
    double integrality_tol = 1e-6;
    double gap_tol = 1e-6; ///< absolute incumbent gap
    SimplexTolerances lp;
};

/// Branch-and-bound over LP relaxations: min c^T x subject to rows,
/// the box, and integrality of the first k variables. Best-first on
/// the parent bound, branching on the most fractional variable.
MasterSolution solve_master(const Vector& c,
                            const std::vector<LinearRow>& rows,
                            const Vector& lower, const Vector& upper,
                            Eigen::Index k,
                            const MilpOptions& opts = MilpOptions{});

} // namespace rocut

#endif
