#include "rocut/problem_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rocut {

namespace {

using nlohmann::json;

double number_field(const json& obj, const std::string& field,
                    const std::string& where) {
    if (!obj.contains(field)) {
        throw ParseError("missing field \"" + field + "\" in " + where);
    }
    if (!obj[field].is_number()) {
        throw ParseError("field \"" + field + "\" in " + where +
                         " is not a number");
    }
    return obj[field].get<double>();
}

Vector vector_field(const json& obj, const std::string& field,
                    const std::string& where) {
    if (!obj.contains(field)) {
        throw ParseError("missing field \"" + field + "\" in " + where);
    }
    const json& arr = obj[field];
    if (!arr.is_array()) {
        throw ParseError("field \"" + field + "\" in " + where +
                         " is not an array");
    }
    Vector v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) {
            throw ParseError("field \"" + field + "\" in " + where +
                             " has a non-numeric entry at position " +
                             std::to_string(i));
        }
        v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    }
    return v;
}

Matrix matrix_field(const json& obj, const std::string& field,
                    const std::string& where) {
    if (!obj.contains(field)) {
        throw ParseError("missing field \"" + field + "\" in " + where);
    }
    const json& arr = obj[field];
    if (!arr.is_array() || arr.empty()) {
        throw ParseError("field \"" + field + "\" in " + where +
                         " is not a nonempty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(arr.size());
    Matrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = arr[static_cast<std::size_t>(i)];
        if (!row.is_array()) {
            throw ParseError("row " + std::to_string(i) + " of \"" + field +
                             "\" in " + where + " is not an array");
        }
        if (i == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
        if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
            throw ParseError("ragged rows in \"" + field + "\" in " + where);
        }
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const json& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_number()) {
                throw ParseError("non-numeric entry in \"" + field +
                                 "\" in " + where);
            }
            m(i, j) = cell.get<double>();
        }
    }
    return m;
}

// Shortest decimal round-trip representation, byte-stable.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back;
    for (int prec = 1; prec < 17; ++prec) {
        char tight[32];
        std::snprintf(tight, sizeof(tight), "%.*g", prec, v);
        std::sscanf(tight, "%lf", &back);
        if (back == v) return tight;
    }
    return buf;
}

} // namespace

RobustProblem parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top-level JSON value is not an object");
    }

    RobustProblem raw;
    raw.n = static_cast<Eigen::Index>(number_field(doc, "n", "problem"));
    raw.k = static_cast<Eigen::Index>(number_field(doc, "k", "problem"));
    raw.c = vector_field(doc, "c", "problem");
    raw.lower = vector_field(doc, "lower", "problem");
    raw.upper = vector_field(doc, "upper", "problem");

    if (doc.contains("certain")) {
        if (!doc["certain"].is_array()) {
            throw ParseError("field \"certain\" is not an array");
        }
        for (std::size_t r = 0; r < doc["certain"].size(); ++r) {
            const std::string where = "certain[" + std::to_string(r) + "]";
            const json& row = doc["certain"][r];
            CertainConstraint con;
            con.coeffs = vector_field(row, "coeffs", where);
            con.rhs = number_field(row, "rhs", where);
            raw.certain.push_back(std::move(con));
        }
    }

    if (!doc.contains("uncertain") || !doc["uncertain"].is_array() ||
        doc["uncertain"].empty()) {
        throw ParseError("field \"uncertain\" must be a nonempty array");
    }
    for (std::size_t i = 0; i < doc["uncertain"].size(); ++i) {
        const std::string where = "uncertain[" + std::to_string(i) + "]";
        const json& row = doc["uncertain"][i];
        EllipsoidalConstraint con;
        con.a = vector_field(row, "a", where);
        con.beta = number_field(row, "beta", where);
        con.sigma = matrix_field(row, "sigma", where);
        con.b = number_field(row, "b", where);
        raw.uncertain.push_back(std::move(con));
    }

    return validate_problem(std::move(raw));
}

RobustProblem parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open problem file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::string serialize_problem(const RobustProblem& problem) {
    json doc;
    doc["n"] = problem.n;
    doc["k"] = problem.k;
    auto to_json_vec = [](const Vector& v) {
        json arr = json::array();
        for (Eigen::Index j = 0; j < v.size(); ++j) arr.push_back(v[j]);
        return arr;
    };
    doc["c"] = to_json_vec(problem.c);
    doc["lower"] = to_json_vec(problem.lower);
    doc["upper"] = to_json_vec(problem.upper);
    doc["certain"] = json::array();
    for (const CertainConstraint& con : problem.certain) {
        doc["certain"].push_back(
            json{{"coeffs", to_json_vec(con.coeffs)}, {"rhs", con.rhs}});
    }
    doc["uncertain"] = json::array();
    for (const EllipsoidalConstraint& con : problem.uncertain) {
        json sigma = json::array();
        for (Eigen::Index i = 0; i < con.sigma.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < con.sigma.cols(); ++j) {
                row.push_back(con.sigma(i, j));
            }
            sigma.push_back(std::move(row));
        }
        doc["uncertain"].push_back(json{{"a", to_json_vec(con.a)},
                                        {"beta", con.beta},
                                        {"sigma", std::move(sigma)},
                                        {"b", con.b}});
    }
    return doc.dump(2);
}

void write_trace_csv(const SolveReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open trace file for writing: " + path);
    }
    const Eigen::Index n = report.x.size();
    out << "iteration,master_objective,max_violation,cuts_added";
    for (Eigen::Index j = 0; j < n; ++j) out << ",x_" << j;
    out << "\n";
    for (const IterationTrace& t : report.trace) {
        out << t.iteration << ',' << fmt(t.master_objective) << ','
            << fmt(t.max_violation) << ',' << t.cuts_added;
        for (Eigen::Index j = 0; j < t.x.size(); ++j) {
            out << ',' << fmt(t.x[j]);
        }
        out << "\n";
    }
}

} // namespace rocut
