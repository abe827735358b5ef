#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixpoint {

enum class ErrorKind {
    ZeroPolynomial,
    BothZero,
    ConstantPolynomial,
    IdentityMap,
    DegreeOverflow,
    BitCapExceeded,
    DegreeTooLow,
    DivisionByZero,
    ParseError,
    PreconditionViolation,
    AmbiguousParent,
    WrongPolynomial,
    NegativeRadicand,
    DegreeZeroNotAllowed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Resource exhaustion (degree or bit guard) as opposed to a misuse.
    bool is_resource_limit() const noexcept {
        return kind_ == ErrorKind::DegreeOverflow || kind_ == ErrorKind::BitCapExceeded;
    }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::ParseError,
                "parse error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace fixpoint
