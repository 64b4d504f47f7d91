#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
public:
    ArityMismatch(int lhs, int rhs)
        : Error("arity mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class LeafCountMismatch : public Error {
public:
    LeafCountMismatch(std::size_t lhs, std::size_t rhs)
        : Error("leaf count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("leaf index " + std::to_string(index) + " out of range (" + std::to_string(size) +
                " leaves)") {}
};

class UnsupportedArity : public Error {
public:
    explicit UnsupportedArity(int arity)
        : Error("unsupported arity " + std::to_string(arity)) {}
};

class InvalidDigit : public Error {
public:
    using Error::Error;
};

/// The digit string ends strictly above a leaf of the top tree.
class InsufficientDepth : public Error {
public:
    explicit InsufficientDepth(std::size_t required)
        : Error("digit string too short, needs at least " + std::to_string(required) + " digits"),
          required_(required) {}

    std::size_t required() const noexcept { return required_; }

private:
    std::size_t required_;
};

/// Two membership criteria that must coincide returned different answers.
class InconsistentCriteria : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class ExpansionBoundExceeded : public Error {
public:
    using Error::Error;
};

class NoConfigurationFound : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace thompson
