#pragma once

// Exact arithmetic in Q(√2, √5).
//
// An element is stored as a + b·√2 + c·√5 + d·√10 with rational a, b, c, d.
// The basis {1, √2, √5, √10} is linearly independent over Q, so componentwise
// equality on lowest-terms rationals is exact equality of real numbers.

#include <array>
#include <cmath>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <Eigen/Core>

namespace coxspin {

using Rational = mpq_class;

/// Raised when inverting zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in FieldScalar") {}
};

/// Raised when an operation needs a square root that is not in the field.
class NotInField : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(int v) : c_{Rational(v), 0, 0, 0} {}                       // NOLINT
    FieldScalar(long v) : c_{Rational(v), 0, 0, 0} {}                      // NOLINT
    FieldScalar(const Rational& v) : c_{v, 0, 0, 0} { c_[0].canonicalize(); } // NOLINT
    FieldScalar(Rational a, Rational b, Rational c, Rational d);

    static FieldScalar sqrt2() { return {0, 1, 0, 0}; }
    static FieldScalar sqrt5() { return {0, 0, 1, 0}; }
    static FieldScalar sqrt10() { return {0, 0, 0, 1}; }
    /// Golden ratio τ = (1 + √5)/2.
    static FieldScalar tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
    /// Galois conjugate σ = (1 − √5)/2.
    static FieldScalar sigma() { return {Rational(1, 2), 0, Rational(-1, 2), 0}; }
    /// p/q as a scalar.
    static FieldScalar ratio(long p, long q) { return FieldScalar(Rational(p, q)); }

    /// Coefficient of 1, √2, √5, √10 for i = 0..3.
    const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);

    friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
    friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
    friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
    friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y);
    FieldScalar operator-() const;
    FieldScalar operator+() const { return *this; }

    friend bool operator==(const FieldScalar& x, const FieldScalar& y) { return x.c_ == y.c_; }
    /// Order of the real numbers represented.
    friend std::strong_ordering operator<=>(const FieldScalar& x, const FieldScalar& y);

    /// Image under √2 → −√2.
    FieldScalar conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
    /// Image under √5 → −√5.
    FieldScalar conj5() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    /// Display-only approximation.
    double to_double() const;

private:
    std::array<Rational, 4> c_{};
};

FieldScalar inverse(const FieldScalar& x);
Sign sign_of(const FieldScalar& x);
FieldScalar abs(const FieldScalar& x);

/// Nonnegative square root if it lies in Q(√2, √5).
std::optional<FieldScalar> sqrt_in_field(const FieldScalar& x);

/// x ∈ Z.
bool is_integer(const FieldScalar& x);
/// x ∈ Z[τ] = {p + qτ : p, q ∈ Z}.
bool in_golden_integers(const FieldScalar& x);

/// Symbolic rendering, e.g. "1/2 + 1/2·√5" or "τ".
std::string to_string(const FieldScalar& x);
std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

/// "p/q" with an explicit denominator, also for integers ("0/1").
std::string rational_to_string(const Rational& r);
/// Parses "p/q" (or "p"); throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Overloads so that templated code can treat FieldScalar and double alike.
inline std::optional<double> sqrt_in_field(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
}
inline bool is_zero(const FieldScalar& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace coxspin

namespace Eigen {

template <>
struct NumTraits<coxspin::FieldScalar> : GenericNumTraits<coxspin::FieldScalar> {
    using Real = coxspin::FieldScalar;
    using NonInteger = coxspin::FieldScalar;
    using Nested = coxspin::FieldScalar;
    using Literal = coxspin::FieldScalar;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 16,
        MulCost = 64
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
