#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neardist {

/// Bad arguments or inconsistent inputs (dimension mismatch, out-of-range parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested case is outside what the library knows exactly (e.g. m_d for d > 8).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration budget exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation needs at least one pair of points.
class EmptyResultError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed point-set text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace neardist
