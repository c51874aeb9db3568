#pragma once

#include <stdexcept>
#include <string>

namespace rr1 {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag used by the CLI when emitting error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Invalid argument or malformed input value (non-finite entries, n < 2, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error("input", message) {}
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

/// Numerically coincident eigenvalues or singular values where simple ones
/// are required.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& message) : Error("degeneracy", message) {}
};

/// More than one near-zero singular value where exactly one is required.
class RankDeficiencyError : public Error {
public:
    explicit RankDeficiencyError(const std::string& message)
        : Error("rank_deficiency", message) {}
};

/// Malformed file content. Carries a 1-based line/column when known
/// (0 when the underlying parser only reports a byte offset).
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("parse", message), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Symbol curve passes through (or indistinguishably close to) the query
/// point, so the winding number is undefined. Carries the offending angle.
class OnCurveError : public Error {
public:
    OnCurveError(const std::string& message, double theta)
        : Error("on_curve", message), theta_(theta) {}
    double theta() const noexcept { return theta_; }

private:
    double theta_;
};

/// Filesystem failure (missing file, unwritable path).
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

} // namespace rr1
