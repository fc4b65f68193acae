#include "rocut/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace rocut {

OracleResult sample_ellipsoid_max(const EllipsoidalConstraint& con,
                                  const Vector& x, long num_samples,
                                  std::uint64_t seed) {
    const Eigen::Index n = con.a.size();
    if (x.size() != n) {
        throw DimensionMismatch("sample_ellipsoid_max: x length mismatch");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    OracleResult out;
    out.samples = num_samples;
    out.value = -std::numeric_limits<double>::infinity();
    Vector u(n);
    for (long s = 0; s < num_samples; ++s) {
        for (Eigen::Index j = 0; j < n; ++j) u[j] = gauss(rng);
        const double norm = u.norm();
        if (norm == 0.0) continue;
        Vector atilde = con.a + (con.beta / norm) * (con.chol.entries * u);
        const double val = atilde.dot(x);
        if (val > out.value) {
            out.value = val;
            out.argmax = std::move(atilde);
        }
    }
    return out;
}

Vector kelley_cut(const EllipsoidalConstraint& con, const Vector& x_nu) {
    const Vector sx = con.sigma * x_nu;
    const double qf = x_nu.dot(sx);
    if (qf <= 1e-14 * con.sigma.norm() * x_nu.squaredNorm()) {
        throw DegeneratePoint("kelley_cut: x^T sigma x vanishes");
    }
    return con.a + (con.beta / std::sqrt(qf)) * sx;
}

double reference_solve_grid(const RobustProblem& problem, long resolution) {
    const Eigen::Index n = problem.n;
    if (n > 3 || problem.k != 0) {
        throw DimensionMismatch(
            "reference_solve_grid: supports n <= 3 and k = 0 only");
    }
    if (resolution < 2) {
        throw DimensionMismatch("reference_solve_grid: resolution < 2");
    }

    Vector step(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        step[j] = (problem.upper[j] - problem.lower[j]) /
                  static_cast<double>(resolution - 1);
    }

    double best = std::numeric_limits<double>::infinity();
    Vector x(n);
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    const double total = std::pow(static_cast<double>(resolution),
                                  static_cast<double>(n));
    for (double count = 0; count < total; ++count) {
        for (Eigen::Index j = 0; j < n; ++j) {
            x[j] = problem.lower[j] +
                   step[j] * static_cast<double>(idx[static_cast<std::size_t>(j)]);
        }
        bool feasible = true;
        for (const CertainConstraint& con : problem.certain) {
            if (con.coeffs.dot(x) > con.rhs) { feasible = false; break; }
        }
        if (feasible) {
            for (const EllipsoidalConstraint& con : problem.uncertain) {
                if (evaluate_robust_constraint(con, x) > 0.0) {
                    feasible = false;
                    break;
                }
            }
        }
        if (feasible) best = std::min(best, problem.c.dot(x));

        // Odometer increment over the grid indices.
        for (Eigen::Index j = 0; j < n; ++j) {
            auto& d = idx[static_cast<std::size_t>(j)];
            if (++d < resolution) break;
            d = 0;
        }
    }
    if (!std::isfinite(best)) {
        throw NoFeasibleGridPoint("reference_solve_grid: no feasible grid point");
    }
    return best;
}

double reference_solve_enumerate(const RobustProblem& problem) {
    const Eigen::Index n = problem.n;
    if (problem.k != n) {
        throw DimensionMismatch("reference_solve_enumerate: requires k = n");
    }
    double lattice = 1.0;
    std::vector<long> lo(static_cast<std::size_t>(n));
    std::vector<long> width(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        const long a = static_cast<long>(std::ceil(problem.lower[j] - 1e-9));
        const long b = static_cast<long>(std::floor(problem.upper[j] + 1e-9));
        if (b < a) {
            throw NoFeasiblePoint("reference_solve_enumerate: empty lattice");
        }
        lo[static_cast<std::size_t>(j)] = a;
        width[static_cast<std::size_t>(j)] = b - a + 1;
        lattice *= static_cast<double>(b - a + 1);
    }
    if (lattice > 1e6) {
        throw LatticeTooLarge("reference_solve_enumerate: " +
                              std::to_string(lattice) + " lattice points");
    }

    double best = std::numeric_limits<double>::infinity();
    Vector x(n);
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    const long total = static_cast<long>(lattice);
    for (long count = 0; count < total; ++count) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            x[j] = static_cast<double>(lo[jj] + idx[jj]);
        }
        bool feasible = true;
        for (const CertainConstraint& con : problem.certain) {
            if (con.coeffs.dot(x) > con.rhs) { feasible = false; break; }
        }
        if (feasible) {
            for (const EllipsoidalConstraint& con : problem.uncertain) {
                if (evaluate_robust_constraint(con, x) > 0.0) {
                    feasible = false;
                    break;
                }
            }
        }
        if (feasible) best = std::min(best, problem.c.dot(x));

        for (Eigen::Index j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            if (++idx[jj] < width[jj]) break;
            idx[jj] = 0;
        }
    }
    if (!std::isfinite(best)) {
        throw NoFeasiblePoint("reference_solve_enumerate: no feasible point");
    }
    return best;
}

} // namespace rocut
