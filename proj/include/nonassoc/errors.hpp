#pragma once

#include <stdexcept>
#include <string>

namespace nonassoc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rational magnitude exceeded the bounded 128-bit representation.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

/// Multiplicative inverse of zero, or division by zero.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

/// Operands belong to different algebras.
class AlgebraMismatch : public Error {
public:
    explicit AlgebraMismatch(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (scalar literals, algebra files, CLI params).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A doubling step was requested with gamma = 0.
class ZeroGamma : public Error {
public:
    explicit ZeroGamma(const std::string& msg) : Error(msg) {}
};

/// x * conj(x) left the span of the unit; indicates a broken construction.
class NotScalar : public Error {
public:
    explicit NotScalar(const std::string& msg) : Error(msg) {}
};

/// Zero was passed where a nonzero element is required
/// (zero is rejected rather than classified as a zero divisor).
class ZeroElement : public Error {
public:
    explicit ZeroElement(const std::string& msg) : Error(msg) {}
};

/// An operation that is only meaningful for alternative algebras was
/// invoked on an algebra whose alternativity check fails.
class NotAlternative : public Error {
public:
    explicit NotAlternative(const std::string& msg) : Error(msg) {}
};

/// A named precondition of a check does not hold on this algebra.
class PreconditionFailed : public Error {
public:
    PreconditionFailed(std::string which, const std::string& msg)
        : Error(msg), which_(std::move(which)) {}

    /// Short machine-readable tag ("hypothesis", "not-associative", ...).
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

} // namespace nonassoc
