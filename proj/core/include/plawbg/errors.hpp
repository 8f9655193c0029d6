#pragma once

#include <stdexcept>
#include <string>

namespace plawbg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed matrix input (bad index, bad sign, duplicate triple).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Degree distribution does not satisfy an estimator precondition.
class EstimatorError : public Error {
public:
    using Error::Error;
};

/// Invalid generator or fit parameter.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// File system failure (open, write, rename).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace plawbg
