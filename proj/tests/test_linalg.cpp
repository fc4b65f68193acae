#include <doctest.h>

#include <random>

#include "rocut/linalg.hpp"
#include "test_util.hpp"

using namespace rocut;

TEST_CASE("cholesky of the identity is the identity") {
    Matrix I = Matrix::Identity(3, 3);
    LowerTriangular L = cholesky(I);
    CHECK((L.entries - I).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("cholesky of [[4,2],[2,3]]") {
    Matrix sigma(2, 2);
    sigma << 4, 2, 2, 3;
    LowerTriangular L = cholesky(sigma);
    CHECK(L.entries(0, 0) == doctest::Approx(2.0));
    CHECK(L.entries(1, 0) == doctest::Approx(1.0));
    CHECK(L.entries(1, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(L.entries(0, 1) == 0.0);
    Matrix rebuilt = L.entries * L.entries.transpose();
    CHECK((rebuilt - sigma).lpNorm<Eigen::Infinity>() <= 1e-10 * 4.0);
}

TEST_CASE("cholesky rejects an indefinite matrix") {
    Matrix sigma(2, 2);
    sigma << 1, 2, 2, 1; // second pivot 1 - 4 < 0
    CHECK_THROWS_AS(cholesky(sigma), NotSPD);
}

TEST_CASE("quad_form basics") {
    LowerTriangular I{Matrix::Identity(2, 2)};
    CHECK(quad_form(I, Vector{{3.0, 4.0}}) == doctest::Approx(25.0));
    CHECK(quad_form(I, Vector::Zero(2)) == 0.0);

    Matrix sigma(2, 2);
    sigma << 4, 2, 2, 3;
    LowerTriangular L = cholesky(sigma);
    CHECK(quad_form(L, Vector{{1.0, 1.0}}) == doctest::Approx(11.0));

    CHECK_THROWS_AS(quad_form(L, Vector::Zero(3)), DimensionMismatch);
}

TEST_CASE("quad_form matches the naive triple product on random SPD input") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 20);
        Matrix sigma = testutil::random_spd(rng, n);
        LowerTriangular L = cholesky(sigma);

        Matrix rebuilt = L.entries * L.entries.transpose();
        const double scale = sigma.lpNorm<Eigen::Infinity>();
        CHECK((rebuilt - sigma).lpNorm<Eigen::Infinity>() <= 1e-10 * scale);

        Vector x = testutil::random_vector(rng, n, 3.0);
        const double naive = x.dot(sigma * x);
        const double stable = quad_form(L, x);
        CHECK(stable == doctest::Approx(naive).epsilon(1e-10));
        CHECK(stable >= 0.0);
    }
}

TEST_CASE("Cauchy-Schwarz holds for the Sigma inner product") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
        Matrix sigma = testutil::random_spd(rng, n);
        LowerTriangular L = cholesky(sigma);
        Vector x = testutil::random_vector(rng, n, 2.0);
        Vector y = testutil::random_vector(rng, n, 2.0);
        const double cross = x.dot(sigma * y);
        CHECK(cross * cross <= quad_form(L, x) * quad_form(L, y) + 1e-10);
    }
}
