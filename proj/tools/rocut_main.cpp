#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rocut/problem_io.hpp"
#include "rocut/verify.hpp"

namespace {

const char* status_name(rocut::SolveStatus s) {
    switch (s) {
        case rocut::SolveStatus::OptimalExact: return "OptimalExact";
        case rocut::SolveStatus::EpsFeasible: return "EpsFeasible";
        case rocut::SolveStatus::RobustInfeasible: return "RobustInfeasible";
        case rocut::SolveStatus::IterationLimit: return "IterationLimit";
    }
    return "Unknown";
}

int run_solve(const std::string& path, double eps, long max_iter,
              const std::string& cut_mode, const std::string& trace_path,
              std::uint64_t seed, const std::string& oracle) {
    rocut::RobustProblem problem;
    try {
        problem = rocut::parse_problem(path);
    } catch (const rocut::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    rocut::SolverConfig config;
    config.eps = eps;
    config.max_iterations = max_iter;
    config.cut_mode = (cut_mode == "all") ? rocut::CutMode::All
                                          : rocut::CutMode::ViolatedOnly;

    rocut::SolveReport report;
    try {
        report = rocut::solve_robust(problem, config);
    } catch (const rocut::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << "status:     " << status_name(report.status) << "\n";
    std::cout << "iterations: " << report.iterations << "\n";
    if (report.status == rocut::SolveStatus::OptimalExact ||
        report.status == rocut::SolveStatus::EpsFeasible) {
        std::cout.precision(12);
        std::cout << "objective:  " << report.objective << "\n";
        std::cout << "x:         ";
        for (Eigen::Index j = 0; j < report.x.size(); ++j) {
            std::cout << ' ' << report.x[j];
        }
        std::cout << "\n";
    }

    if (!trace_path.empty()) {
        try {
            rocut::write_trace_csv(report, trace_path);
        } catch (const rocut::SolverError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    if (oracle != "none" &&
        (report.status == rocut::SolveStatus::OptimalExact ||
         report.status == rocut::SolveStatus::EpsFeasible)) {
        try {
            double ref = (oracle == "grid")
                             ? rocut::reference_solve_grid(problem, 2001)
                             : rocut::reference_solve_enumerate(problem);
            std::cout << "oracle (" << oracle << "): " << ref << "\n";
        } catch (const rocut::SolverError& e) {
            std::cerr << "oracle error: " << e.what() << "\n";
            return 1;
        }
    }
    (void)seed;

    switch (report.status) {
        case rocut::SolveStatus::OptimalExact:
        case rocut::SolveStatus::EpsFeasible: return 0;
        case rocut::SolveStatus::RobustInfeasible: return 2;
        case rocut::SolveStatus::IterationLimit: return 3;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cutting-plane solver for mixed-integer robust linear "
                 "programs with ellipsoidal uncertainty"};
    app.require_subcommand(1);

    std::string path;
    double eps = 1e-6;
    long max_iter = 1000;
    std::string cut_mode = "violated";
    std::string trace_path;
    std::uint64_t seed = 0;
    std::string oracle = "none";

    CLI::App* solve = app.add_subcommand("solve", "Solve a problem file");
    solve->add_option("problem", path, "JSON problem file")->required();
    solve->add_option("--eps", eps, "Stopping tolerance");
    solve->add_option("--max-iter", max_iter, "Iteration budget");
    solve->add_option("--cut-mode", cut_mode, "all | violated")
        ->check(CLI::IsMember({"all", "violated"}));
    solve->add_option("--trace", trace_path, "Write per-iteration CSV here");
    solve->add_option("--seed", seed, "Seed for sampling oracles");
    solve->add_option("--oracle", oracle, "grid | enumerate | none")
        ->check(CLI::IsMember({"grid", "enumerate", "none"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    return run_solve(path, eps, max_iter, cut_mode, trace_path, seed, oracle);
}
