#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forcinglab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 text; `offset` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Input larger than a routine supports (graph6 width, brute-force limits).
class UnsupportedSize : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (disconnected graph, path where a
/// non-path is required, vertex out of range, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace forcinglab
