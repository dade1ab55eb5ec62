#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewcyc {

enum class ErrorKind {
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    ZeroInverse,
    FieldMismatch,
    InvalidExponent,
    EnumerationTooLarge,
    LengthNotDivisibleBy3,
    NonMonicDivisor,
    ZeroDivisor,
    DomainMismatch,
    AutMismatch,
    SearchSpaceTooLarge,
    BothZero,
    NotRightDivisor,
    NotMonic,
    LengthMismatch,
    HypothesisViolated,
    NotCoprime,
    TableTooLarge,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this exception; `kind()`
/// names the violated precondition.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace skewcyc
