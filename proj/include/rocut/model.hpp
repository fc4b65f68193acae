#ifndef ROCUT_MODEL_HPP
#define ROCUT_MODEL_HPP

#include <vector>

#include "rocut/linalg.hpp"

namespace rocut {

/// One uncertain row: the coefficient vector lives in the ellipsoid
/// { a + beta * L * u : ||u|| <= 1 } with sigma = L * L^T.
/// The robust counterpart of the row is
///   g(x) = a^T x + beta * sqrt(x^T sigma x) - b <= 0.
struct EllipsoidalConstraint {
    Vector a;            ///< nominal coefficients
    double beta = 0.0;   ///< protection level, >= 0
    Matrix sigma;        ///< SPD variance-covariance matrix
    double b = 0.0;      ///< certain right-hand side
    LowerTriangular chol; ///< cached Cholesky factor of sigma
};

/// An ordinary deterministic row coeffs^T x <= rhs.
struct CertainConstraint {
    Vector coeffs;
    double rhs = 0.0;
};

/// min c^T x over a finite box, subject to certain linear rows and
/// uncertain ellipsoidal rows; the first k variables are integral.
struct RobustProblem {
    Eigen::Index n = 0;
    Eigen::Index k = 0;
    Vector c;
    Vector lower;
    Vector upper;
    std::vector<CertainConstraint> certain;
    std::vector<EllipsoidalConstraint> uncertain;
};

/// Check all structural invariants and cache Cholesky factors.
/// Throws NotSPD (naming the offending constraint), DimensionMismatch,
/// UnboundedBox or NegativeBeta.
RobustProblem validate_problem(RobustProblem raw);

/// g(x) = a^T x + beta * sqrt(x^T sigma x) - b, evaluated through the
/// cached factor. Convex in x; reduces to a^T x - b when beta = 0.
double evaluate_robust_constraint(const EllipsoidalConstraint& con,
                                  const Vector& x);

} // namespace rocut

#endif
