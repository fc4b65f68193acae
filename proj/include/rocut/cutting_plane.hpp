#ifndef ROCUT_CUTTING_PLANE_HPP
#define ROCUT_CUTTING_PLANE_HPP

#include <vector>

#include "rocut/milp_solver.hpp"
#include "rocut/model.hpp"

namespace rocut {

/// A linear outer-approximation row ahat^T x <= rhs generated for one
/// uncertain constraint at one iteration (iteration 0 is the nominal
/// row installed before the first master solve).
struct Cut {
    std::size_t constraint_index = 0;
    long iteration = 0;
    Vector coeffs;
    double rhs = 0.0;
};

enum class CutMode { All, ViolatedOnly };

struct SolverConfig {
    double eps = 1e-6;
    long max_iterations = 1000;
    CutMode cut_mode = CutMode::ViolatedOnly;
    long node_limit = 100000;
};

struct IterationTrace {
    long iteration = 0;
    double master_objective = 0.0;
    double max_violation = 0.0;
    long cuts_added = 0;
    Vector x;
};

enum class SolveStatus { OptimalExact, EpsFeasible, RobustInfeasible,
                         IterationLimit };

struct SolveReport {
    SolveStatus status = SolveStatus::IterationLimit;
    Vector x;
    double objective = 0.0;
    long iterations = 0;
    std::vector<IterationTrace> trace;
};

/// Worst-case coefficient vector over the ellipsoid at a master point:
/// the boundary point a + beta * L * u with u = L^T x / ||L^T x||.
/// Satisfies the tight-cut identity ahat^T x - b = g(x).
/// Throws DegeneratePoint when x^T sigma x vanishes.
Vector worst_case_coefficients(const EllipsoidalConstraint& con,
                               const Vector& x);

enum class Stopping { FeasibleExact, EpsFeasible, Continue };

struct StoppingResult {
    Stopping kind = Stopping::FeasibleExact;
    double max_violation = 0.0;
};

/// Feasibility test of the master point against the conic rows:
/// FeasibleExact when every g_i(x) <= 0, EpsFeasible when the worst
/// violation is below eps, Continue otherwise.
StoppingResult check_stopping(const RobustProblem& problem, const Vector& x,
                              double eps);

/// One cut per constraint (All) or per violated constraint
/// (ViolatedOnly); constraints with a degenerate denominator at x are
/// skipped. Throws NoCutGenerated when nothing at all can be cut.
std::vector<Cut> generate_cuts(const RobustProblem& problem, const Vector& x,
                               long iteration, CutMode mode);

/// The outer-approximation loop: nominal cuts, then alternate master
/// solves with analytic worst-case cut generation until the master
/// point is (eps-)feasible for every conic row.
SolveReport solve_robust(const RobustProblem& problem,
                         const SolverConfig& config = SolverConfig{});

} // namespace rocut

#endif
