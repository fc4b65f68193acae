#include "rocut/model.hpp"

#include <cmath>
#include <string>

namespace rocut {

RobustProblem validate_problem(RobustProblem raw) {
    const Eigen::Index n = raw.n;
    if (n <= 0) {
        throw DimensionMismatch("problem dimension n must be positive");
    }
    if (raw.k < 0 || raw.k > n) {
        throw DimensionMismatch("integer count k = " + std::to_string(raw.k) +
                                " outside [0, " + std::to_string(n) + "]");
    }
    if (raw.c.size() != n || raw.lower.size() != n || raw.upper.size() != n) {
        throw DimensionMismatch("objective or bound vector length differs from n");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!std::isfinite(raw.lower[j]) || !std::isfinite(raw.upper[j])) {
            throw UnboundedBox("bound on variable " + std::to_string(j) +
                               " is not finite");
        }
        if (raw.lower[j] > raw.upper[j]) {
            throw DimensionMismatch("lower > upper for variable " +
                                    std::to_string(j));
        }
    }
    for (std::size_t r = 0; r < raw.certain.size(); ++r) {
        if (raw.certain[r].coeffs.size() != n) {
            throw DimensionMismatch("certain constraint " + std::to_string(r) +
                                    " has coefficient length " +
                                    std::to_string(raw.certain[r].coeffs.size()));
        }
    }
    for (std::size_t i = 0; i < raw.uncertain.size(); ++i) {
        EllipsoidalConstraint& con = raw.uncertain[i];
        if (con.a.size() != n) {
            throw DimensionMismatch("uncertain constraint " + std::to_string(i) +
                                    " has nominal vector length " +
                                    std::to_string(con.a.size()));
        }
        if (con.sigma.rows() != n || con.sigma.cols() != n) {
            throw DimensionMismatch("uncertain constraint " + std::to_string(i) +
                                    " has sigma of wrong shape");
        }
        if (!(con.beta >= 0.0)) {
            throw NegativeBeta("uncertain constraint " + std::to_string(i) +
                               " has beta = " + std::to_string(con.beta));
        }
        // Symmetry is required exactly as stored.
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index s = r + 1; s < n; ++s) {
                if (con.sigma(r, s) != con.sigma(s, r)) {
                    throw DimensionMismatch(
                        "sigma of uncertain constraint " + std::to_string(i) +
                        " is not symmetric");
                }
            }
        }
        try {
            con.chol = cholesky(con.sigma);
        } catch (const NotSPD& e) {
            throw NotSPD("uncertain constraint " + std::to_string(i) +
                         ": " + e.what());
        }
    }
    return raw;
}

double evaluate_robust_constraint(const EllipsoidalConstraint& con,
                                  const Vector& x) {
    return con.a.dot(x) + con.beta * std::sqrt(quad_form(con.chol, x)) - con.b;
}

} // namespace rocut
