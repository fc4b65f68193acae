#ifndef ROCUT_VERIFY_HPP
#define ROCUT_VERIFY_HPP

#include <cstdint>

#include "rocut/model.hpp"

namespace rocut {

struct OracleResult {
    double value = 0.0;
    Vector argmax;
    long samples = 0;
};

/// Monte-Carlo lower bound on max_{atilde in U} atilde^T x, sampling
/// atilde = a + beta * L * u with u uniform on the unit sphere.
/// Deterministic given the seed; never exceeds the analytic support
/// value a^T x + beta * sqrt(x^T sigma x).
OracleResult sample_ellipsoid_max(const EllipsoidalConstraint& con,
                                  const Vector& x, long num_samples,
                                  std::uint64_t seed);

/// Gradient-based linearization coefficients of g at x_nu, computed
/// from sigma directly: a + beta * sigma * x_nu / sqrt(x_nu^T sigma x_nu).
/// Must coincide with worst_case_coefficients, which is built from the
/// Cholesky-factor argmax instead.
Vector kelley_cut(const EllipsoidalConstraint& con, const Vector& x_nu);

/// Exhaustive grid scan of the box (n <= 3, k = 0) at `resolution`
/// points per axis; returns the best objective among grid points
/// feasible for every certain and conic row. An upper bound on the
/// true optimum. Throws NoFeasibleGridPoint.
double reference_solve_grid(const RobustProblem& problem, long resolution);

/// Exact enumeration over all integral points of the box (k = n,
/// at most 1e6 lattice points). Throws LatticeTooLarge or
/// NoFeasiblePoint.
double reference_solve_enumerate(const RobustProblem& problem);

} // namespace rocut

#endif
