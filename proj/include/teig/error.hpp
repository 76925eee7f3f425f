#pragma once

#include <stdexcept>
#include <string>

namespace teig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Stable machine-readable identifier, used by the CLI error objects.
    virtual const char* kind() const noexcept { return "error"; }
};

/// Input has the wrong shape (slice lengths, vector sizes, mixed degrees).
class DimensionMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "dimension-mismatch"; }
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "zero-polynomial"; }
};

/// det(lambda I - R0') stayed numerically zero on every evaluation circle tried.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "degenerate-denominator"; }
};

/// The interpolated quotient did not behave like a monic polynomial of the expected degree.
class DegreeMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "degree-mismatch"; }
};

/// y^m F_x - x^m F_y vanishes identically, so the structured formula does not apply.
class DegenerateNumerator : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "degenerate-numerator"; }
};

/// A numerical step (e.g. an exact division) left a residual above its tolerance.
class NumericalFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "numerical-failure"; }
};

class UnknownLabel : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "unknown-label"; }
};

/// A Jacobian probe failed; carries the index of the offending direction.
class ProbeFailure : public Error {
public:
    ProbeFailure(std::size_t direction, const std::string& what)
        : Error("direction " + std::to_string(direction) + ": " + what), direction_(direction) {}
    const char* kind() const noexcept override { return "probe-failure"; }
    std::size_t direction() const noexcept { return direction_; }

private:
    std::size_t direction_;
};

}  // namespace teig
