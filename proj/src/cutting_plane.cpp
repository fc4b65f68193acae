#include "rocut/cutting_plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rocut {

namespace {

constexpr double kDegenerateRel = 1e-14;
constexpr double kCutDedupTol = 1e-12;
constexpr double kStallTol = 1e-12;
constexpr int kStallWindow = 50;

bool degenerate_at(const EllipsoidalConstraint& con, const Vector& x,
                   double qf) {
    const double scale = con.sigma.norm() * x.squaredNorm();
    return qf <= kDegenerateRel * scale;
}

} // namespace

Vector worst_case_coefficients(const EllipsoidalConstraint& con,
                               const Vector& x) {
    // Argmax of atilde^T x over { a + beta * L * u : ||u|| <= 1 } is
    // attained at u = L^T x / ||L^T x||.
    Vector Ltx = con.chol.entries.transpose() * x;
    const double qf = Ltx.squaredNorm();
    if (degenerate_at(con, x, qf)) {
        throw DegeneratePoint("worst_case_coefficients: x^T sigma x vanishes");
    }
    return con.a + (con.beta / std::sqrt(qf)) * (con.chol.entries * Ltx);
}

StoppingResult check_stopping(const RobustProblem& problem, const Vector& x,
                              double eps) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const EllipsoidalConstraint& con : problem.uncertain) {
        worst = std::max(worst, evaluate_robust_constraint(con, x));
    }
    StoppingResult out;
    out.max_violation = worst;
    if (worst <= 0.0) {
        out.kind = Stopping::FeasibleExact;
    } else if (worst < eps) {
        out.kind = Stopping::EpsFeasible;
    } else {
        out.kind = Stopping::Continue;
    }
    return out;
}

std::vector<Cut> generate_cuts(const RobustProblem& problem, const Vector& x,
                               long iteration, CutMode mode) {
    std::vector<Cut> cuts;
    bool any_candidate = false;
    for (std::size_t i = 0; i < problem.uncertain.size(); ++i) {
        const EllipsoidalConstraint& con = problem.uncertain[i];
        if (mode == CutMode::ViolatedOnly &&
            evaluate_robust_constraint(con, x) <= 0.0) {
            continue;
        }
        any_candidate = true;
        try {
            Vector ahat = worst_case_coefficients(con, x);
            cuts.push_back(Cut{i, iteration, std::move(ahat), con.b});
        } catch (const DegeneratePoint&) {
            // g is linear at x; the nominal row already covers it.
        }
    }
    if (cuts.empty() && any_candidate) {
        throw NoCutGenerated("generate_cuts: every candidate constraint is "
                             "degenerate at x");
    }
    return cuts;
}

SolveReport solve_robust(const RobustProblem& problem,
                         const SolverConfig& config) {
    std::vector<LinearRow> rows;
    std::vector<Cut> pool;
    rows.reserve(problem.certain.size() + problem.uncertain.size());
    for (const CertainConstraint& con : problem.certain) {
        rows.push_back(LinearRow{con.coeffs, con.rhs});
    }
    // Nominal cuts ahat^(0) = a for every constraint.
    for (std::size_t i = 0; i < problem.uncertain.size(); ++i) {
        pool.push_back(Cut{i, 0, problem.uncertain[i].a,
                           problem.uncertain[i].b});
        rows.push_back(LinearRow{problem.uncertain[i].a,
                                 problem.uncertain[i].b});
    }

    MilpOptions milp;
    milp.node_limit = config.node_limit;

    SolveReport report;
    double best_violation = std::numeric_limits<double>::infinity();
    int stall = 0;

    for (long l = 1; l <= config.max_iterations; ++l) {
        MasterSolution master = solve_master(problem.c, rows, problem.lower,
                                             problem.upper, problem.k, milp);
        if (master.status == MasterStatus::Infeasible) {
            // The cut pool is a relaxation of the robust counterpart, so
            // the robust problem itself has no feasible point.
            report.status = SolveStatus::RobustInfeasible;
            report.iterations = l;
            return report;
        }

        StoppingResult stop = check_stopping(problem, master.x, config.eps);

        IterationTrace t;
        t.iteration = l;
        t.master_objective = master.objective;
        t.max_violation = stop.max_violation;
        t.x = master.x;

        report.x = master.x;
        report.objective = master.objective;
        report.iterations = l;

        if (stop.kind != Stopping::Continue) {
            report.trace.push_back(std::move(t));
            report.status = (stop.kind == Stopping::FeasibleExact)
                                ? SolveStatus::OptimalExact
                                : SolveStatus::EpsFeasible;
            return report;
        }

        std::vector<Cut> fresh =
            generate_cuts(problem, master.x, l, config.cut_mode);
        long added = 0;
        for (Cut& cut : fresh) {
            bool duplicate = false;
            for (const Cut& old : pool) {
                if (old.constraint_index == cut.constraint_index &&
                    (old.coeffs - cut.coeffs).lpNorm<Eigen::Infinity>() <=
                        kCutDedupTol) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            rows.push_back(LinearRow{cut.coeffs, cut.rhs});
            pool.push_back(std::move(cut));
            ++added;
        }
        t.cuts_added = added;
        report.trace.push_back(std::move(t));

        // Floating-point stall guard: the violation must keep shrinking.
        if (stop.max_violation < best_violation - kStallTol) {
            best_violation = stop.max_violation;
            stall = 0;
        } else if (++stall >= kStallWindow) {
            report.status = SolveStatus::IterationLimit;
            return report;
        }
    }

    report.status = SolveStatus::IterationLimit;
    return report;
}

} // namespace rocut
