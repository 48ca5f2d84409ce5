#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit code 1; parse errors map to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    // Stable machine-readable error name, e.g. "shape-error".
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error("shape-error", what) {}
};

class UnsupportedModelError : public Error {
public:
    explicit UnsupportedModelError(const std::string& what)
        : Error("unsupported-model", what) {}
};

class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& what)
        : Error("admissibility-error", what) {}
};

class IncompleteDataError : public Error {
public:
    explicit IncompleteDataError(const std::string& what)
        : Error("incomplete-data", what) {}
};

// Raised when an exact computation produces a value that contradicts an
// internal integrality or consistency guarantee.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what)
        : Error("internal-consistency", what) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error("range-error", what) {}
};

class PurityError : public Error {
public:
    explicit PurityError(const std::string& what) : Error("purity-error", what) {}
};

class NonConformingError : public Error {
public:
    explicit NonConformingError(const std::string& what)
        : Error("non-conforming", what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse-error", what + " (line " + std::to_string(line) +
                                   ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace orient
