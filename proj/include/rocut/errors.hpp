#ifndef ROCUT_ERRORS_HPP
#define ROCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rocut {

/// Base class for all errors raised by the library.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A supposedly SPD matrix failed Cholesky factorization.
class NotSPD : public SolverError {
public:
    explicit NotSPD(const std::string& msg) : SolverError(msg) {}
};

class DimensionMismatch : public SolverError {
public:
    explicit DimensionMismatch(const std::string& msg) : SolverError(msg) {}
};

/// A variable bound is infinite; the method requires a compact box.
class UnboundedBox : public SolverError {
public:
    explicit UnboundedBox(const std::string& msg) : SolverError(msg) {}
};

class NegativeBeta : public SolverError {
public:
    explicit NegativeBeta(const std::string& msg) : SolverError(msg) {}
};

/// Simplex could not resolve degeneracy within the anti-cycling budget.
class NumericalBreakdown : public SolverError {
public:
    explicit NumericalBreakdown(const std::string& msg) : SolverError(msg) {}
};

class NodeLimitExceeded : public SolverError {
public:
    explicit NodeLimitExceeded(const std::string& msg) : SolverError(msg) {}
};

/// The quadratic form vanishes at the query point; no cut can be generated.
class DegeneratePoint : public SolverError {
public:
    explicit DegeneratePoint(const std::string& msg) : SolverError(msg) {}
};

class NoCutGenerated : public SolverError {
public:
    explicit NoCutGenerated(const std::string& msg) : SolverError(msg) {}
};

class ParseError : public SolverError {
public:
    explicit ParseError(const std::string& msg) : SolverError(msg) {}
};

class NoFeasibleGridPoint : public SolverError {
public:
    explicit NoFeasibleGridPoint(const std::string& msg) : SolverError(msg) {}
};

class NoFeasiblePoint : public SolverError {
public:
    explicit NoFeasiblePoint(const std::string& msg) : SolverError(msg) {}
};

class LatticeTooLarge : public SolverError {
public:
    explicit LatticeTooLarge(const std::string& msg) : SolverError(msg) {}
};

} // namespace rocut

#endif
