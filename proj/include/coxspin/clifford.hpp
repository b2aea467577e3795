#pragma once

// Clifford algebra Cl(3) of Euclidean 3-space.
//
// Blade order is fixed as {1; σ1, σ2, σ3; σ1σ2, σ2σ3, σ3σ1; I = σ1σ2σ3}, so that
// σ1σ2 = Iσ3, σ2σ3 = Iσ1, σ3σ1 = Iσ2.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "coxspin/exactfield.hpp"

namespace coxspin {

template <typename Scalar>
using Vector3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3T = Eigen::Matrix<Scalar, 3, 3>;

using Vector3 = Vector3T<FieldScalar>;
using Matrix3 = Matrix3T<FieldScalar>;

enum class Blade : int { scalar = 0, e1, e2, e3, e12, e23, e31, e123 };
enum class Parity { even, odd };

namespace detail {

struct BladeProduct {
    int index;
    int sign;
};

// Bitmask of each blade in ascending-vector order, and the orientation of the
// stored blade relative to that ascending product (σ3σ1 = −σ1σ3).
inline constexpr std::array<std::uint8_t, 8> blade_mask{0b000, 0b001, 0b010, 0b100,
                                                        0b011, 0b110, 0b101, 0b111};
inline constexpr std::array<int, 8> blade_orientation{1, 1, 1, 1, 1, 1, -1, 1};
inline constexpr std::array<int, 8> blade_grade{0, 1, 1, 1, 2, 2, 2, 3};

constexpr int index_of_mask(std::uint8_t mask) {
    for (int i = 0; i < 8; ++i) {
        if (blade_mask[static_cast<std::size_t>(i)] == mask) return i;
    }
    return -1;
}

// Sign of reordering the ascending product A·B into ascending order.
constexpr int reorder_sign(std::uint8_t a, std::uint8_t b) {
    int swaps = 0;
    for (int i = 0; i < 3; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < i; ++j) {
            if (b & (1u << j)) ++swaps;
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

constexpr std::array<std::array<BladeProduct, 8>, 8> make_product_table() {
    std::array<std::array<BladeProduct, 8>, 8> table{};
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const std::uint8_t ma = blade_mask[i];
            const std::uint8_t mb = blade_mask[j];
            const int k = index_of_mask(static_cast<std::uint8_t>(ma ^ mb));
            const int s = reorder_sign(ma, mb) * blade_orientation[i] * blade_orientation[j] *
                          blade_orientation[static_cast<std::size_t>(k)];
            table[i][j] = {k, s};
        }
    }
    return table;
}

}  // namespace detail

/// Blade multiplication table: σ_A σ_B = sign · σ_index.
inline constexpr auto blade_product_table = detail::make_product_table();

template <typename Scalar>
class Multivector {
public:
    using Coeffs = Eigen::Matrix<Scalar, 8, 1>;

    Multivector() : c_(Coeffs::Zero()) {}
    explicit Multivector(const Coeffs& c) : c_(c) {}

    static Multivector scalar(const Scalar& s) {
        Multivector m;
        m.c_[0] = s;
        return m;
    }
    static Multivector blade(Blade b, const Scalar& s = Scalar(1)) {
        Multivector m;
        m.c_[static_cast<int>(b)] = s;
        return m;
    }
    static Multivector vector(const Vector3T<Scalar>& v) {
        Multivector m;
        m.c_.template segment<3>(1) = v;
        return m;
    }
    /// a + b·Iσ1 + c·Iσ2 + d·Iσ3, written (a; b, c, d).
    static Multivector even(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
        Multivector m;
        m.c_[0] = a;
        m.c_[5] = b;  // Iσ1 = σ2σ3
        m.c_[6] = c;  // Iσ2 = σ3σ1
        m.c_[4] = d;  // Iσ3 = σ1σ2
        return m;
    }
    static Multivector pseudoscalar() { return blade(Blade::e123); }

    const Scalar& operator[](Blade b) const { return c_[static_cast<int>(b)]; }
    Scalar& operator[](Blade b) { return c_[static_cast<int>(b)]; }
    const Coeffs& coeffs() const { return c_; }

    Multivector grade(int g) const {
        Multivector m;
        for (int i = 0; i < 8; ++i) {
            if (detail::blade_grade[static_cast<std::size_t>(i)] == g) m.c_[i] = c_[i];
        }
        return m;
    }
    bool has_grade(int g) const {
        for (int i = 0; i < 8; ++i) {
            if (detail::blade_grade[static_cast<std::size_t>(i)] == g && !is_zero(c_[i])) return true;
        }
        return false;
    }
    /// Parity if the element is purely even (grades 0, 2) or purely odd (1, 3).
    std::optional<Parity> parity() const {
        const bool ev = has_grade(0) || has_grade(2);
        const bool od = has_grade(1) || has_grade(3);
        if (ev && !od) return Parity::even;
        if (od && !ev) return Parity::odd;
        return std::nullopt;
    }

    Scalar scalar_part() const { return c_[0]; }
    Vector3T<Scalar> vector_part() const { return c_.template segment<3>(1); }
    /// Coefficients of (Iσ1, Iσ2, Iσ3).
    Vector3T<Scalar> bivector_dual_part() const { return {c_[5], c_[6], c_[4]}; }

    Multivector& operator+=(const Multivector& o) { c_ += o.c_; return *this; }
    Multivector& operator-=(const Multivector& o) { c_ -= o.c_; return *this; }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    Multivector operator-() const { return Multivector(Coeffs(-c_)); }
    friend Multivector operator*(const Scalar& s, const Multivector& m) { return Multivector(Coeffs(m.c_ * s)); }
    friend Multivector operator*(const Multivector& m, const Scalar& s) { return s * m; }

    /// Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        Multivector out;
        for (int i = 0; i < 8; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; j < 8; ++j) {
                if (is_zero(b.c_[j])) continue;
                const auto& p = blade_product_table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (p.sign > 0) {
                    out.c_[p.index] += a.c_[i] * b.c_[j];
                } else {
                    out.c_[p.index] -= a.c_[i] * b.c_[j];
                }
            }
        }
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) { return a.c_ == b.c_; }

private:
    Coeffs c_;
};

using Multivector3 = Multivector<FieldScalar>;

/// Lexicographic order on blade coefficients.
template <typename Scalar>
struct MultivectorLess {
    bool operator()(const Multivector<Scalar>& a, const Multivector<Scalar>& b) const {
        for (int i = 0; i < 8; ++i) {
            const auto c = a.coeffs()[i] <=> b.coeffs()[i];
            if (c != 0) return c < 0;
        }
        return false;
    }
};

/// Lexicographic order on vector coordinates (any fixed size).
struct CoordinateLess {
    template <typename Derived>
    bool operator()(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) const {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            const auto c = a.derived()(i) <=> b.derived()(i);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

template <typename Scalar>
Multivector<Scalar> geometric_product(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
    return a * b;
}

/// Reversion: grades 0, 1 fixed, grades 2, 3 negated.
template <typename Scalar>
Multivector<Scalar> reverse(const Multivector<Scalar>& a) {
    auto c = a.coeffs();
    c.template tail<4>() = -c.template tail<4>();
    return Multivector<Scalar>(c);
}

/// Multiplication by the pseudoscalar I.
template <typename Scalar>
Multivector<Scalar> hodge_dual(const Multivector<Scalar>& a) {
    return Multivector<Scalar>::pseudoscalar() * a;
}

template <typename Scalar>
Multivector<Scalar> hodge_dual(const Vector3T<Scalar>& v) {
    return hodge_dual(Multivector<Scalar>::vector(v));
}

/// |A|² = A·Ã for a versor; nullopt when A·Ã is not a pure scalar.
template <typename Scalar>
std::optional<Scalar> versor_magnitude_sq(const Multivector<Scalar>& a) {
    const auto n = a * reverse(a);
    if (n.has_grade(1) || n.has_grade(2) || n.has_grade(3)) return std::nullopt;
    return n.scalar_part();
}

/// Unit normal along n; throws for zero n or a norm outside the field.
template <typename Scalar>
Vector3T<Scalar> normalized(const Vector3T<Scalar>& n) {
    const Scalar n2 = n.dot(n);
    if (is_zero(n2)) throw std::invalid_argument("zero vector has no direction");
    const auto len = sqrt_in_field(n2);
    if (!len) throw NotInField("norm of the vector is not in the field");
    return n * (Scalar(1) / *len);
}

/// Reflection a′ = −n a n in the plane orthogonal to n (normalized internally).
template <typename Scalar>
Vector3T<Scalar> reflect(const Vector3T<Scalar>& a, const Vector3T<Scalar>& n) {
    using MV = Multivector<Scalar>;
    const MV nn = MV::vector(normalized(n));
    return (-(nn * MV::vector(a) * nn)).vector_part();
}

/// Rotation a″ = R a R̃; throws unless R R̃ = 1.
template <typename Scalar>
Vector3T<Scalar> rotate(const Vector3T<Scalar>& a, const Multivector<Scalar>& rotor) {
    using MV = Multivector<Scalar>;
    if (!(rotor * reverse(rotor) == MV::scalar(Scalar(1)))) {
        throw std::invalid_argument("rotate: R R~ != 1");
    }
    return (rotor * MV::vector(a) * reverse(rotor)).vector_part();
}

/// Orthogonal map of a versor: a ↦ ±A a Ã / |A|², sign + for even parity.
// Uses A a Ã rather than Ã a A so that a rotor acts exactly as in rotate().
template <typename Scalar>
Vector3T<Scalar> apply_versor(const Vector3T<Scalar>& a, const Multivector<Scalar>& versor, Parity parity) {
    using MV = Multivector<Scalar>;
    const auto mag = versor_magnitude_sq(versor);
    if (!mag || is_zero(*mag)) throw std::invalid_argument("apply_versor: null versor");
    Vector3T<Scalar> out = (versor * MV::vector(a) * reverse(versor)).vector_part() * (Scalar(1) / *mag);
    return parity == Parity::odd ? Vector3T<Scalar>(-out) : out;
}

/// Matrix of the orthogonal map induced by a versor (columns are images of σ1, σ2, σ3).
template <typename Scalar>
Matrix3T<Scalar> induced_matrix(const Multivector<Scalar>& versor, Parity parity) {
    Matrix3T<Scalar> m;
    for (int j = 0; j < 3; ++j) {
        m.col(j) = apply_versor(Vector3T<Scalar>(Vector3T<Scalar>::Unit(j)), versor, parity);
    }
    return m;
}

}  // namespace coxspin
