#ifndef ROCUT_LINALG_HPP
#define ROCUT_LINALG_HPP

#include <Eigen/Dense>

#include "rocut/errors.hpp"

namespace rocut {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Lower-triangular Cholesky factor L with Sigma = L * L^T.
/// Strictly-upper entries are exactly zero, diagonal entries positive.
struct LowerTriangular {
    Matrix entries;

    Eigen::Index dim() const { return entries.rows(); }
};

/// Factor a symmetric positive-definite matrix, Sigma = L * L^T.
/// A pivot is rejected when it falls below 1e-12 times the largest
/// diagonal entry of Sigma, so semidefinite inputs are refused.
LowerTriangular cholesky(const Matrix& sigma);

/// x^T Sigma x evaluated as ||L^T x||^2, which cannot go negative
/// under rounding.
double quad_form(const LowerTriangular& L, const Vector& x);

} // namespace rocut

#endif
