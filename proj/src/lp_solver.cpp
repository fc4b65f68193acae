#include "rocut/lp_solver.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace rocut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Variable layout: [0, n) structural, [n, n+p) slacks, [n+p, n+2p)
// artificials. Rows are held as equalities A x + w + D t = rhs with
// slack w >= 0 and artificial t >= 0 (D has -1 where the initial slack
// residual is negative).
struct Workspace {
    Matrix A;    // p x N
    Vector rhs;  // p
    Vector cost; // N
    Vector lo;   // N
    Vector up;   // N
    std::vector<Eigen::Index> basis; // p entries
    std::vector<char> is_basic;      // N entries
    std::vector<char> at_upper;      // N entries, meaningful when nonbasic
};

Vector nonbasic_point(const Workspace& w) {
    Vector x = Vector::Zero(w.A.cols());
    for (Eigen::Index j = 0; j < w.A.cols(); ++j) {
        if (!w.is_basic[j]) {
            x[j] = w.at_upper[j] ? w.up[j] : w.lo[j];
        }
    }
    return x;
}

Matrix basis_inverse(const Workspace& w) {
    const Eigen::Index p = w.A.rows();
    Matrix B(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        B.col(i) = w.A.col(w.basis[i]);
    }
    Eigen::PartialPivLU<Matrix> lu(B);
    return lu.inverse();
}

// Primal simplex over the current basis; on return the workspace holds
// an optimal basis and `x_out` the full variable vector.
void optimize(Workspace& w, const SimplexTolerances& tol, Vector& x_out) {
    const Eigen::Index p = w.A.rows();
    const Eigen::Index N = w.A.cols();

    Matrix Binv = basis_inverse(w);
    int degen_streak = 0;
    long pivots_since_refactor = 0;

    for (long iter = 0;; ++iter) {
        if (iter >= tol.max_pivots) {
            throw NumericalBreakdown("simplex pivot budget exhausted");
        }
        if (pivots_since_refactor >= 64) {
            Binv = basis_inverse(w);
            pivots_since_refactor = 0;
        }

        Vector xn = nonbasic_point(w);
        Vector xB = Binv * (w.rhs - w.A * xn);

        Vector cB(p);
        for (Eigen::Index i = 0; i < p; ++i) cB[i] = w.cost[w.basis[i]];
        Vector y = Binv.transpose() * cB;
        Vector d = w.cost - w.A.transpose() * y;

        const bool bland = degen_streak >= tol.degenerate_limit;

        // Entering variable.
        Eigen::Index q = -1;
        double best = tol.reduced_cost;
        for (Eigen::Index j = 0; j < N; ++j) {
            if (w.is_basic[j] || w.lo[j] == w.up[j]) continue;
            const double dj = w.at_upper[j] ? -d[j] : d[j];
            if (dj < -tol.reduced_cost) {
                if (bland) { q = j; break; }
                if (-dj > best) { best = -dj; q = j; }
            }
        }
        if (q < 0) {
            // Optimal: assemble the full point.
            x_out = xn;
            for (Eigen::Index i = 0; i < p; ++i) x_out[w.basis[i]] = xB[i];
            return;
        }

        const double sigma = w.at_upper[q] ? -1.0 : 1.0;
        Vector alpha = Binv * w.A.col(q);

        // Ratio test: entering moves by t >= 0, basic i changes by
        // delta_i * t with delta_i = -sigma * alpha_i.
        double t_max = w.up[q] - w.lo[q]; // own bound flip (may be inf)
        Eigen::Index leave = -1;          // row index, -1 means bound flip
        double leave_abs_delta = 0.0;
        for (Eigen::Index i = 0; i < p; ++i) {
            const double delta = -sigma * alpha[i];
            double lim;
            if (delta > tol.pivot) {
                if (w.up[w.basis[i]] == kInf) continue;
                lim = (w.up[w.basis[i]] - xB[i]) / delta;
            } else if (delta < -tol.pivot) {
                lim = (xB[i] - w.lo[w.basis[i]]) / (-delta);
            } else {
                continue;
            }
            if (lim < 0.0) lim = 0.0;
            const bool strictly_smaller = lim < t_max - 1e-12;
            const bool tie = !strictly_smaller && lim < t_max + 1e-12 &&
                             leave >= 0;
            bool take = strictly_smaller || (leave < 0 && lim <= t_max);
            if (tie) {
                take = bland ? (w.basis[i] < w.basis[leave])
                             : (std::abs(delta) > leave_abs_delta);
            }
            if (take) {
                t_max = lim;
                leave = i;
                leave_abs_delta = std::abs(delta);
            }
        }

        if (t_max == kInf) {
            throw NumericalBreakdown("simplex met an unbounded direction");
        }

        degen_streak = (t_max <= 1e-10) ? degen_streak + 1 : 0;

        if (leave < 0) {
            // Entering travels to its opposite bound; basis unchanged.
            w.at_upper[q] = !w.at_upper[q];
            continue;
        }

        const double delta_r = -sigma * alpha[leave];
        const Eigen::Index out = w.basis[leave];
        w.is_basic[out] = 0;
        w.at_upper[out] = delta_r > 0.0; // hit upper when it was rising
        w.basis[leave] = q;
        w.is_basic[q] = 1;

        // Product-form update of the basis inverse.
        const double piv = alpha[leave];
        if (std::abs(piv) <= tol.pivot) {
            throw NumericalBreakdown("simplex pivot element too small");
        }
        Vector mult = alpha / piv;
        Vector row_r = Binv.row(leave);
        for (Eigen::Index i = 0; i < p; ++i) {
            if (i == leave) continue;
            Binv.row(i) -= mult[i] * row_r.transpose();
        }
        Binv.row(leave) = row_r.transpose() / piv;
        ++pivots_since_refactor;
    }
}

} // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexTolerances& tol) {
    const Eigen::Index n = lp.c.size();
    const Eigen::Index p = static_cast<Eigen::Index>(lp.rows.size());
    if (lp.lower.size() != n || lp.upper.size() != n) {
        throw DimensionMismatch("solve_lp: bound vectors do not match c");
    }
    for (const LinearRow& row : lp.rows) {
        if (row.coeffs.size() != n) {
            throw DimensionMismatch("solve_lp: row length does not match c");
        }
    }

    if (p == 0) {
        // Pure box problem: each variable sits at the bound its cost prefers.
        LpSolution sol;
        sol.status = LpStatus::Optimal;
        sol.x = Vector(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            sol.x[j] = (lp.c[j] >= 0.0) ? lp.lower[j] : lp.upper[j];
        }
        sol.objective = lp.c.dot(sol.x);
        return sol;
    }

    const Eigen::Index N = n + 2 * p;
    Workspace w;
    w.A = Matrix::Zero(p, N);
    w.rhs = Vector(p);
    w.cost = Vector::Zero(N);
    w.lo = Vector::Zero(N);
    w.up = Vector::Constant(N, kInf);
    w.basis.resize(p);
    w.is_basic.assign(N, 0);
    w.at_upper.assign(N, 0);

    for (Eigen::Index i = 0; i < p; ++i) {
        w.A.row(i).head(n) = lp.rows[i].coeffs.transpose();
        w.A(i, n + i) = 1.0; // slack
        w.rhs[i] = lp.rows[i].rhs;
    }
    w.lo.head(n) = lp.lower;
    w.up.head(n) = lp.upper;

    // Phase 1: slack basis where the residual allows it, artificial
    // otherwise; minimize the artificial sum.
    Vector x0 = lp.lower;
    for (Eigen::Index i = 0; i < p; ++i) {
        const double resid = w.rhs[i] - lp.rows[i].coeffs.dot(x0);
        const Eigen::Index art = n + p + i;
        if (resid >= 0.0) {
            w.basis[i] = n + i;
            w.is_basic[n + i] = 1;
            w.up[art] = 0.0; // unused artificial stays fixed at zero
            w.A(i, art) = 1.0;
        } else {
            w.A(i, art) = -1.0;
            w.basis[i] = art;
            w.is_basic[art] = 1;
            w.cost[art] = 1.0;
        }
    }
    bool need_phase1 = false;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (w.cost[w.basis[i]] != 0.0) need_phase1 = true;
    }

    Vector xfull;
    if (need_phase1) {
        optimize(w, tol, xfull);
        double infeas = 0.0;
        for (Eigen::Index i = 0; i < p; ++i) {
            infeas += xfull[n + p + i];
        }
        if (infeas > tol.row_feasibility) {
            return LpSolution{LpStatus::Infeasible, Vector(), 0.0};
        }
    }

    // Phase 2: real objective, artificials pinned at zero.
    w.cost.setZero();
    w.cost.head(n) = lp.c;
    for (Eigen::Index i = 0; i < p; ++i) {
        w.up[n + p + i] = 0.0;
    }
    optimize(w, tol, xfull);

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x = xfull.head(n);
    sol.objective = lp.c.dot(sol.x);

    // Clip roundoff on the box and sanity-check row residuals.
    for (Eigen::Index j = 0; j < n; ++j) {
        sol.x[j] = std::min(std::max(sol.x[j], lp.lower[j]), lp.upper[j]);
    }
    for (Eigen::Index i = 0; i < p; ++i) {
        const double resid = lp.rows[i].coeffs.dot(sol.x) - lp.rows[i].rhs;
        if (resid > tol.row_feasibility) {
            throw NumericalBreakdown(
                "simplex returned a point violating row " + std::to_string(i) +
                " by " + std::to_string(resid));
        }
    }
    return sol;
}

} // namespace rocut
