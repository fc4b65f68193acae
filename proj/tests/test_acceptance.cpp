// Acceptance suite: end-to-end checks of the solver's convergence
// machinery on randomized instances plus the hand-derived 2-D cases.
// Each criterion prints one pass/fail line.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "rocut/cutting_plane.hpp"
#include "rocut/problem_io.hpp"
#include "rocut/verify.hpp"
#include "test_util.hpp"

using namespace rocut;

namespace {

void report_line(int num, const char* what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what);
    std::fflush(stdout);
}

RobustProblem random_instance(std::mt19937_64& rng, bool integral_half) {
    std::uniform_int_distribution<int> ndist(2, 10);
    std::uniform_int_distribution<int> mdist(1, 5);
    std::uniform_real_distribution<double> beta_dist(0.1, 2.0);
    std::uniform_real_distribution<double> slack_dist(0.1, 1.0);
    std::uniform_real_distribution<double> interior(-2.0, 2.0);

    RobustProblem raw;
    raw.n = ndist(rng);
    raw.k = integral_half ? raw.n / 2 : 0;
    raw.c = testutil::random_vector(rng, raw.n);
    raw.lower = Vector::Constant(raw.n, -5.0);
    raw.upper = Vector::Constant(raw.n, 5.0);

    // A random interior point; integral in the first k coordinates so
    // the mixed-integer instances stay feasible by construction.
    Vector x0(raw.n);
    for (Eigen::Index j = 0; j < raw.n; ++j) x0[j] = interior(rng);
    for (Eigen::Index j = 0; j < raw.k; ++j) x0[j] = std::round(x0[j]);

    const int m = mdist(rng);
    for (int i = 0; i < m; ++i) {
        EllipsoidalConstraint con;
        con.a = testutil::random_vector(rng, raw.n);
        con.beta = beta_dist(rng);
        con.sigma = testutil::random_spd(rng, raw.n);
        con.chol = cholesky(con.sigma);
        con.b = con.a.dot(x0) +
                con.beta * std::sqrt(quad_form(con.chol, x0)) +
                slack_dist(rng);
        raw.uncertain.push_back(std::move(con));
    }
    return validate_problem(std::move(raw));
}

// Reports collected by criterion 1 and re-examined by criterion 7.
std::vector<SolveReport> g_suite_reports;

} // namespace

TEST_CASE("criterion 1: finite termination on 50 random instances") {
    std::mt19937_64 rng(20250801);
    SolverConfig config;
    config.eps = 1e-6;
    config.max_iterations = 500;

    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int inst = 0; inst < 50; ++inst) {
        RobustProblem p = random_instance(rng, inst % 2 == 1);
        SolveReport rep = solve_robust(p, config);
        const bool converged = rep.status == SolveStatus::OptimalExact ||
                               rep.status == SolveStatus::EpsFeasible;
        if (!converged || rep.iterations > 500) ok = false;
        g_suite_reports.push_back(std::move(rep));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds >= 60.0) ok = false;
    report_line(1, "finite termination (eps = 1e-6, <= 500 iters, < 60 s)", ok);
    CHECK(ok);
}

TEST_CASE("criterion 2: continuous oracle equivalence on the 2-D instance") {
    RobustProblem p = testutil::example_2d();
    SolveReport rep = solve_robust(p);
    const double exact = 10.0 * std::sqrt(2.0) - 20.0;
    bool ok = std::abs(rep.objective - exact) <= 1e-6;
    const double grid = reference_solve_grid(p, 2001);
    ok = ok && std::abs(grid - exact) <= 1.5e-2;
    report_line(2, "continuous objective = 10*sqrt(2) - 20 and grid oracle",
                ok);
    CHECK(ok);
}

TEST_CASE("criterion 3: integer oracle equivalence on the 2-D instance") {
    RobustProblem p = testutil::example_2d(2);
    SolveReport rep = solve_robust(p);
    const double brute = reference_solve_enumerate(p);
    const bool ok = rep.objective == brute && brute == -5.0;
    report_line(3, "integer objective equals enumeration exactly (-5)", ok);
    CHECK(ok);
}

TEST_CASE("criterion 4: tight-cut identity on 1000 random pairs") {
    std::mt19937_64 rng(4001);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 9);
        EllipsoidalConstraint con = testutil::random_constraint(rng, n);
        Vector x = testutil::random_vector(rng, n, 2.0);
        if (x.norm() < 1e-3) x[0] += 1.0;
        Vector ahat = worst_case_coefficients(con, x);
        const double g = evaluate_robust_constraint(con, x);
        if (std::abs(ahat.dot(x) - con.b - g) > 1e-10) ok = false;
    }
    report_line(4, "|ahat^T x - b - g(x)| <= 1e-10", ok);
    CHECK(ok);
}

TEST_CASE("criterion 5: cut validity over 10^4 random pairs") {
    std::mt19937_64 rng(5001);
    bool ok = true;
    for (int trial = 0; trial < 10000; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 9);
        EllipsoidalConstraint con = testutil::random_constraint(rng, n);
        Vector xnu = testutil::random_vector(rng, n, 2.0);
        if (xnu.norm() < 1e-3) xnu[0] += 1.0;
        Vector ahat = worst_case_coefficients(con, xnu);
        Vector x = testutil::random_vector(rng, n, 2.0);
        const double support =
            con.a.dot(x) + con.beta * std::sqrt(quad_form(con.chol, x));
        if (ahat.dot(x) > support + 1e-10) ok = false;
    }
    report_line(5, "ahat(x_nu)^T x never exceeds the support function", ok);
    CHECK(ok);
}

TEST_CASE("criterion 6: Kelley cuts coincide with the analytic cuts") {
    std::mt19937_64 rng(6001);
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 9);
        EllipsoidalConstraint con = testutil::random_constraint(rng, n);
        Vector x = testutil::random_vector(rng, n, 2.0);
        if (x.norm() < 1e-3) x[0] += 1.0;
        Vector a1 = worst_case_coefficients(con, x);
        Vector a2 = kelley_cut(con, x);
        if ((a1 - a2).lpNorm<Eigen::Infinity>() > 1e-12) ok = false;

        if (trial < 200) {
            const double h = 1e-6;
            for (Eigen::Index j = 0; j < n; ++j) {
                Vector xp = x, xm = x;
                xp[j] += h;
                xm[j] -= h;
                const double fd = (evaluate_robust_constraint(con, xp) -
                                   evaluate_robust_constraint(con, xm)) /
                                  (2.0 * h);
                if (std::abs(a2[j] - fd) >
                    1e-5 * std::max(1.0, std::abs(fd))) {
                    ok = false;
                }
            }
        }
    }
    report_line(6, "kelley_cut == worst_case_coefficients, matches central "
                   "differences", ok);
    CHECK(ok);
}

TEST_CASE("criterion 7: monotone master lower bounds in every suite solve") {
    bool ok = !g_suite_reports.empty();
    for (const SolveReport& rep : g_suite_reports) {
        double prev = -std::numeric_limits<double>::infinity();
        for (const IterationTrace& t : rep.trace) {
            if (t.master_objective < prev - 1e-9) ok = false;
            prev = t.master_objective;
        }
    }
    report_line(7, "master objective nondecreasing across iterations", ok);
    CHECK(ok);
}

TEST_CASE("criterion 8: sampling-oracle dominance and convergence") {
    std::mt19937_64 rng(8001);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 6);
        EllipsoidalConstraint con = testutil::random_constraint(rng, n);
        Vector x = testutil::random_vector(rng, n, 2.0);
        const double support =
            con.a.dot(x) + con.beta * std::sqrt(quad_form(con.chol, x));
        OracleResult r = sample_ellipsoid_max(con, x, 1000, rng());
        if (r.value > support + 1e-12) ok = false;
    }
    RobustProblem p = testutil::example_2d();
    OracleResult big =
        sample_ellipsoid_max(p.uncertain[0], Vector{{3.0, 4.0}}, 1000000, 7);
    if (big.value > 12.0 + 1e-12) ok = false;
    if (std::abs(big.value - 12.0) > 0.01 * 12.0) ok = false;
    report_line(8, "sampled maximum below support value, within 1% at 1e6 "
                   "samples", ok);
    CHECK(ok);
}

TEST_CASE("criterion 9: beta = 0 reduces to the deterministic master") {
    std::mt19937_64 rng(9001);
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        RobustProblem p = random_instance(rng, trial % 2 == 1);
        for (EllipsoidalConstraint& con : p.uncertain) con.beta = 0.0;

        SolveReport rep = solve_robust(p);
        const bool converged = rep.status == SolveStatus::OptimalExact ||
                               rep.status == SolveStatus::EpsFeasible;
        if (!converged || rep.iterations != 1) ok = false;
        std::vector<LinearRow> rows;
        for (const EllipsoidalConstraint& con : p.uncertain) {
            rows.push_back(LinearRow{con.a, con.b});
        }
        MasterSolution direct =
            solve_master(p.c, rows, p.lower, p.upper, p.k);
        if (direct.status != MasterStatus::Optimal ||
            std::abs(direct.objective - rep.objective) > 1e-9) {
            ok = false;
        }
    }
    report_line(9, "beta = 0 terminates in 1 iteration, matches direct "
                   "master", ok);
    CHECK(ok);
}

TEST_CASE("criterion 10: byte-identical traces across repeated runs") {
    auto run = [](const std::string& trace) {
        const std::string cmd = std::string(ROCUT_BIN) + " solve " +
                                ROCUT_DATA_DIR + "/instance2d.json --trace " +
                                trace + " > /dev/null";
        return std::system(cmd.c_str());
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    };
    bool ok = run("acc_trace1.csv") == 0 && run("acc_trace2.csv") == 0;
    const std::string a = slurp("acc_trace1.csv");
    const std::string b = slurp("acc_trace2.csv");
    ok = ok && !a.empty() && a == b;
    std::remove("acc_trace1.csv");
    std::remove("acc_trace2.csv");
    report_line(10, "repeated runs produce byte-identical trace CSVs", ok);
    CHECK(ok);
}
