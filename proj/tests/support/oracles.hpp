#pragma once

// Test-only oracles. Nothing here goes through the geometric-product table,
// the versor machinery, or the reflection closure under test.

#include <array>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "coxspin/clifford.hpp"
#include "coxspin/coxeter.hpp"
#include "coxspin/exactfield.hpp"
#include "coxspin/quaternion.hpp"

namespace coxspin::oracle {

// --- Pauli-matrix model of Cl(3) -------------------------------------------

using Cplx = std::complex<double>;
using Pauli = Eigen::Matrix<Cplx, 2, 2>;

inline Pauli pauli(int k) {
    Pauli m;
    switch (k) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Cplx(0, -1), Cplx(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: m = Pauli::Identity();
    }
    return m;
}

/// Matrix of each stored blade, built as the literal product of σ matrices.
inline Pauli blade_matrix(int index) {
    switch (index) {
        case 0: return Pauli::Identity();
        case 1: return pauli(1);
        case 2: return pauli(2);
        case 3: return pauli(3);
        case 4: return pauli(1) * pauli(2);
        case 5: return pauli(2) * pauli(3);
        case 6: return pauli(3) * pauli(1);
        default: return pauli(1) * pauli(2) * pauli(3);
    }
}

inline Pauli to_pauli(const Multivector3& m) {
    Pauli out = Pauli::Zero();
    for (int i = 0; i < 8; ++i) out += m.coeffs()[i].to_double() * blade_matrix(i);
    return out;
}

inline bool near(const Pauli& a, const Pauli& b, double tol = 1e-9) { return (a - b).norm() < tol; }

// --- exact reflection-matrix group -----------------------------------------

struct MatrixLess {
    bool operator()(const Matrix3& a, const Matrix3& b) const { return CoordinateLess{}(a, b); }
};

/// I − 2 n nᵀ / (n·n).
inline Matrix3 reflection_matrix(const Vector3& n) {
    const FieldScalar k = FieldScalar(2) / n.dot(n);
    Matrix3 m = Matrix3::Identity();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) -= k * n[i] * n[j];
    }
    return m;
}

/// Group generated by the reflection matrices of the given normals.
inline std::set<Matrix3, MatrixLess> reflection_group(const std::vector<Vector3>& normals) {
    std::vector<Matrix3> gens;
    for (const auto& n : normals) gens.push_back(reflection_matrix(n));
    std::set<Matrix3, MatrixLess> found{Matrix3::Identity()};
    std::vector<Matrix3> work{Matrix3::Identity()};
    while (!work.empty()) {
        const Matrix3 x = work.back();
        work.pop_back();
        for (const auto& g : gens) {
            Matrix3 y = (x * g).eval();
            if (found.insert(y).second) work.push_back(y);
        }
    }
    return found;
}

// --- literal polyhedral vertex sets -----------------------------------------

inline std::set<Vector3, CoordinateLess> octahedron() {
    std::set<Vector3, CoordinateLess> out;
    for (int i = 0; i < 3; ++i) {
        for (int s : {1, -1}) {
            Vector3 v = Vector3::Zero();
            v[i] = FieldScalar(s);
            out.insert(v);
        }
    }
    return out;
}

/// Permutations of (±1, ±1, 0)/√2.
inline std::set<Vector3, CoordinateLess> cuboctahedron() {
    const FieldScalar r = FieldScalar::sqrt2() * FieldScalar::ratio(1, 2);
    std::set<Vector3, CoordinateLess> out;
    for (int zero = 0; zero < 3; ++zero) {
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                Vector3 v = Vector3::Zero();
                const int i = (zero + 1) % 3;
                const int j = (zero + 2) % 3;
                v[i] = FieldScalar(s1) * r;
                v[j] = FieldScalar(s2) * r;
                out.insert(v);
            }
        }
    }
    return out;
}

/// (±1, 0, 0), ½(±τ, ±1, ±σ) and cyclic permutations.
inline std::set<Vector3, CoordinateLess> icosidodecahedron() {
    auto out = octahedron();
    const FieldScalar h = FieldScalar::ratio(1, 2);
    const std::array<FieldScalar, 3> base{FieldScalar::tau() * h, h, FieldScalar::sigma() * h};
    for (int shift = 0; shift < 3; ++shift) {
        for (int mask = 0; mask < 8; ++mask) {
            Vector3 v;
            for (int k = 0; k < 3; ++k) {
                FieldScalar c = base[static_cast<std::size_t>(k)];
                if (mask & (1 << k)) c = -c;
                v[(k + shift) % 3] = c;
            }
            out.insert(v);
        }
    }
    return out;
}

// --- random generators ------------------------------------------------------

class Random {
public:
    explicit Random(unsigned seed = 20260214u) : gen_(seed) {}

    Rational rational(int max_num = 9, int max_den = 6) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(gen_), den(gen_));
    }
    /// Random element with each basis coefficient zero about a third of the time.
    FieldScalar scalar() {
        std::array<Rational, 4> c;
        std::uniform_int_distribution<int> keep(0, 2);
        for (auto& r : c) r = keep(gen_) == 0 ? Rational(0) : rational();
        return {c[0], c[1], c[2], c[3]};
    }
    FieldScalar nonzero_scalar() {
        for (;;) {
            FieldScalar x = scalar();
            if (!x.is_zero()) return x;
        }
    }
    Vector3 vector() { return {scalar(), scalar(), scalar()}; }
    QuaternionF quaternion() { return {scalar(), scalar(), scalar(), scalar()}; }
    Multivector3 multivector() {
        Multivector3::Coeffs c;
        for (int i = 0; i < 8; ++i) c[i] = scalar();
        return Multivector3(c);
    }
    /// Rational point on the unit sphere via inverse stereographic projection.
    Vector3 unit_vector() {
        for (;;) {
            const Rational s = rational(5, 4);
            const Rational t = rational(5, 4);
            const Rational d = 1 + s * s + t * t;
            Vector3 v(FieldScalar(Rational((1 - s * s - t * t) / d)), FieldScalar(Rational(2 * s / d)),
                      FieldScalar(Rational(2 * t / d)));
            std::uniform_int_distribution<int> perm(0, 2);
            std::swap(v[0], v[perm(gen_)]);
            if (!v.isZero()) return v;
        }
    }
    int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }

private:
    std::mt19937 gen_;
};

}  // namespace coxspin::oracle
