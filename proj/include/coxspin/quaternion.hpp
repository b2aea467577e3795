#pragma once

// Quaternions over an exact scalar, the discrete unit groups (Lipschitz,
// Hurwitz, Hurwitz duals, icosians), and the identification of Cl(3) spinors
// with quaternions.

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "coxspin/clifford.hpp"
#include "coxspin/exactfield.hpp"

namespace coxspin {

template <typename Scalar>
using Vector4T = Eigen::Matrix<Scalar, 4, 1>;
using Vector4 = Vector4T<FieldScalar>;

/// q0 + q1 e1 + q2 e2 + q3 e3 with e_i e_j = −δ_ij + ε_ijk e_k.
template <typename Scalar>
class Quaternion {
public:
    Quaternion() : c_(Vector4T<Scalar>::Zero()) {}
    Quaternion(const Scalar& q0, const Scalar& q1, const Scalar& q2, const Scalar& q3) : c_(q0, q1, q2, q3) {}
    explicit Quaternion(const Vector4T<Scalar>& v) : c_(v) {}

    static Quaternion identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}; }
    /// e_i for i = 1, 2, 3.
    static Quaternion unit(int i) {
        Quaternion q;
        q.c_[i] = Scalar(1);
        return q;
    }
    static Quaternion pure(const Vector3T<Scalar>& v) { return {Scalar(0), v[0], v[1], v[2]}; }

    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const Vector4T<Scalar>& coeffs() const { return c_; }
    Vector3T<Scalar> imaginary() const { return c_.template tail<3>(); }
    bool is_pure() const { return is_zero(c_[0]); }

    Scalar norm_sq() const { return c_.dot(c_); }

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        const auto& a = p.c_;
        const auto& b = q.c_;
        return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) { return Quaternion(Vector4T<Scalar>(p.c_ + q.c_)); }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) { return Quaternion(Vector4T<Scalar>(p.c_ - q.c_)); }
    Quaternion operator-() const { return Quaternion(Vector4T<Scalar>(-c_)); }
    friend Quaternion operator*(const Scalar& s, const Quaternion& q) { return Quaternion(Vector4T<Scalar>(q.c_ * s)); }

    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.c_ == q.c_; }

private:
    Vector4T<Scalar> c_;
};

using QuaternionF = Quaternion<FieldScalar>;

template <typename Scalar>
struct QuaternionLess {
    bool operator()(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) const {
        return CoordinateLess{}(p.coeffs(), q.coeffs());
    }
};

template <typename Scalar>
Quaternion<Scalar> qmul(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
    return p * q;
}

template <typename Scalar>
Quaternion<Scalar> qconj(const Quaternion<Scalar>& q) {
    return {q[0], -q[1], -q[2], -q[3]};
}

/// (p, q) = ½(p̄q + pq̄), the scalar part of p̄q.
template <typename Scalar>
Scalar qinner(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
    const auto sym = qconj(p) * q + p * qconj(q);
    return sym[0] * (Scalar(1) / Scalar(2));
}

/// [p, q]: x ↦ p x q, or [p, q]*: x ↦ p x̄ q when starred.
template <typename Scalar>
Quaternion<Scalar> apply_pq(const Quaternion<Scalar>& x, const Quaternion<Scalar>& p, const Quaternion<Scalar>& q,
                            bool starred) {
    return p * (starred ? qconj(x) : x) * q;
}

/// Even element (a; b, c, d) = a + bIσ1 + cIσ2 + dIσ3 to the quaternion (a, −b, −c, −d).
// e_i ↔ −Iσ_i: (Iσ1)(Iσ2) = −Iσ3 while e1e2 = e3, so the sign flip is what
// makes this a homomorphism onto the Hamilton product.
template <typename Scalar>
Quaternion<Scalar> spinor_to_quaternion(const Multivector<Scalar>& r) {
    const auto b = r.bivector_dual_part();
    return {r.scalar_part(), -b[0], -b[1], -b[2]};
}

template <typename Scalar>
Multivector<Scalar> quaternion_to_spinor(const Quaternion<Scalar>& q) {
    return Multivector<Scalar>::even(q[0], -q[1], -q[2], -q[3]);
}

/// Raw coordinates (a, b, c, d) of (a; b, c, d); an anti-homomorphism.
template <typename Scalar>
Quaternion<Scalar> spinor_coordinates(const Multivector<Scalar>& r) {
    const auto b = r.bivector_dual_part();
    return {r.scalar_part(), b[0], b[1], b[2]};
}

enum class QuaternionGroup { lipschitz, hurwitz, hurwitz_duals, icosians };

std::string_view to_string(QuaternionGroup g);

/// The literal unit sets, sorted and deduplicated: 8, 24, 24 and 120 elements.
std::vector<QuaternionF> catalog(QuaternionGroup g);

/// Sorted, deduplicated copy.
std::vector<QuaternionF> sorted_unique(std::vector<QuaternionF> qs);

}  // namespace coxspin
