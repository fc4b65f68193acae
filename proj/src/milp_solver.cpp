#include "rocut/milp_solver.hpp"

#include <cmath>
#include <limits>
#include <queue>

namespace rocut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
    Vector lower;
    Vector upper;
    double parent_bound;
    long order;
};

struct NodeWorse {
    bool operator()(const Node& a, const Node& b) const {
        if (a.parent_bound != b.parent_bound) {
            return a.parent_bound > b.parent_bound;
        }
        return a.order > b.order; // earlier creation first
    }
};

// Most fractional variable among the first k, ties to the lowest index.
Eigen::Index pick_branch(const Vector& x, Eigen::Index k, double tol) {
    Eigen::Index best = -1;
    double best_dist = tol;
    for (Eigen::Index j = 0; j < k; ++j) {
        const double dist = std::abs(x[j] - std::round(x[j]));
        if (dist > best_dist) {
            best_dist = dist;
            best = j;
        }
    }
    return best;
}

} // namespace

MasterSolution solve_master(const Vector& c,
                            const std::vector<LinearRow>& rows,
                            const Vector& lower, const Vector& upper,
                            Eigen::Index k,
                            const MilpOptions& opts) {
    if (k < 0 || k > c.size()) {
        throw DimensionMismatch("solve_master: k outside [0, n]");
    }

    LinearProgram lp;
    lp.c = c;
    lp.rows = rows;
    lp.lower = lower;
    lp.upper = upper;

    if (k == 0) {
        LpSolution rel = solve_lp(lp, opts.lp);
        MasterSolution out;
        out.nodes_explored = 1;
        if (rel.status == LpStatus::Infeasible) return out;
        out.status = MasterStatus::Optimal;
        out.x = rel.x;
        out.objective = rel.objective;
        return out;
    }

    std::priority_queue<Node, std::vector<Node>, NodeWorse> open;
    long created = 0;
    open.push(Node{lower, upper, -kInf, created++});

    double incumbent_obj = kInf;
    Vector incumbent_x;
    long nodes = 0;

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        if (node.parent_bound >= incumbent_obj - opts.gap_tol) continue;

        if (nodes >= opts.node_limit) {
            throw NodeLimitExceeded("branch-and-bound node limit reached");
        }
        ++nodes;

        lp.lower = node.lower;
        lp.upper = node.upper;
        LpSolution rel = solve_lp(lp, opts.lp);
        if (rel.status == LpStatus::Infeasible) continue;
        if (rel.objective >= incumbent_obj - opts.gap_tol) continue;

        const Eigen::Index j = pick_branch(rel.x, k, opts.integrality_tol);
        if (j < 0) {
            // Integral to tolerance: snap to the lattice and accept.
            Vector x = rel.x;
            for (Eigen::Index i = 0; i < k; ++i) x[i] = std::round(x[i]);
            const double obj = c.dot(x);
            if (obj < incumbent_obj) {
                incumbent_obj = obj;
                incumbent_x = x;
            }
            continue;
        }

        const double split = rel.x[j];
        Node down{node.lower, node.upper, rel.objective, created++};
        down.upper[j] = std::floor(split);
        if (down.lower[j] <= down.upper[j]) open.push(std::move(down));

        Node up{node.lower, node.upper, rel.objective, created++};
        up.lower[j] = std::ceil(split);
        if (up.lower[j] <= up.upper[j]) open.push(std::move(up));
    }

    MasterSolution out;
    out.nodes_explored = nodes;
    if (incumbent_x.size() == 0) return out; // Infeasible
    out.status = MasterStatus::Optimal;
    out.x = incumbent_x;
    out.objective = incumbent_obj;
    return out;
}

} // namespace rocut
