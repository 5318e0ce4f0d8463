#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside the carrier of the quantale in force
/// (outside [0,1], or non-binary under the Boolean family).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operands are indexed by incompatible index sets, or kernels do not chain.
class ShapeError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// Builder or operation parameters out of their admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed text or binary input. Carries the byte offset where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace qmt
