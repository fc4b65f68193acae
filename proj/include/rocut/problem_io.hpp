#ifndef ROCUT_PROBLEM_IO_HPP
#define ROCUT_PROBLEM_IO_HPP

#include <string>

#include "rocut/cutting_plane.hpp"
#include "rocut/model.hpp"

namespace rocut {

/// Parse and validate a JSON problem file with fields
/// n, k, c, lower, upper, certain ([{coeffs, rhs}]) and
/// uncertain ([{a, beta, sigma, b}]); sigma is a full n x n array.
/// Throws ParseError with field context, or any validation error.
RobustProblem parse_problem(const std::string& path);

/// Parse from an in-memory JSON document (used by parse_problem).
RobustProblem parse_problem_text(const std::string& text);

/// Serialize back to the same JSON schema.
std::string serialize_problem(const RobustProblem& problem);

/// Write the per-iteration trace as CSV with header
/// iteration,master_objective,max_violation,cuts_added,x_0..x_{n-1}.
/// The format is deterministic: identical reports give identical bytes.
void write_trace_csv(const SolveReport& report, const std::string& path);

} // namespace rocut

#endif
