#include "rocut/linalg.hpp"

#include <cmath>
#include <string>

namespace rocut {

namespace {
constexpr double kSpdPivotRel = 1e-12;
}

LowerTriangular cholesky(const Matrix& sigma) {
    const Eigen::Index n = sigma.rows();
    if (sigma.cols() != n) {
        throw DimensionMismatch("cholesky: matrix is not square");
    }
    const double max_diag = (n > 0) ? sigma.diagonal().maxCoeff() : 0.0;
    const double pivot_tol = kSpdPivotRel * std::max(max_diag, 0.0);

    Matrix L = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double pivot = sigma(j, j) - L.row(j).head(j).squaredNorm();
        if (pivot <= pivot_tol) {
            throw NotSPD("cholesky: pivot " + std::to_string(pivot) +
                         " at column " + std::to_string(j) +
                         " is not positive");
        }
        L(j, j) = std::sqrt(pivot);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            L(i, j) = (sigma(i, j) -
                       L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
        }
    }
    return LowerTriangular{std::move(L)};
}

double quad_form(const LowerTriangular& L, const Vector& x) {
    if (x.size() != L.dim()) {
        throw DimensionMismatch("quad_form: vector length " +
                                std::to_string(x.size()) +
                                " does not match factor dimension " +
                                std::to_string(L.dim()));
    }
    return (L.entries.transpose() * x).squaredNorm();
}

} // namespace rocut
