#include <doctest.h>

#include <set>

#include "coxspin/coxeter.hpp"
#include "coxspin/quaternion.hpp"
#include "support/oracles.hpp"

using namespace coxspin;
using F = FieldScalar;
using Q = QuaternionF;
using MV = Multivector3;

namespace {

// e_k ↔ −iσ_k in 2×2 complex matrices.
oracle::Pauli to_matrix(const Q& q) {
    const oracle::Cplx mi(0, -1);
    oracle::Pauli m = q[0].to_double() * oracle::pauli(0);
    for (int k = 1; k <= 3; ++k) m += q[k].to_double() * mi * oracle::pauli(k);
    return m;
}

bool closed(const std::vector<Q>& set) {
    const std::set<Q, QuaternionLess<F>> s(set.begin(), set.end());
    for (const auto& p : set) {
        if (!s.count(qconj(p))) return false;
        for (const auto& q : set) {
            if (!s.count(p * q)) return false;
        }
    }
    return true;
}

std::vector<Q> unite(std::vector<Q> a, const std::vector<Q>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return sorted_unique(std::move(a));
}

}  // namespace

TEST_CASE("Hamilton relations") {
    const Q e1 = Q::unit(1);
    const Q e2 = Q::unit(2);
    const Q e3 = Q::unit(3);
    const Q m1 = -Q::identity();
    CHECK(e1 * e1 == m1);
    CHECK(e2 * e2 == m1);
    CHECK(e3 * e3 == m1);
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e3 == e1);
    CHECK(e3 * e1 == e2);
    CHECK(e2 * e1 == -e3);
    CHECK(e1 * e2 * e3 == m1);
}

TEST_CASE("product agrees with the matrix model") {
    oracle::Random rng(31);
    for (int n = 0; n < 1000; ++n) {
        const Q p = rng.quaternion();
        const Q q = rng.quaternion();
        REQUIRE(oracle::near(to_matrix(p * q), to_matrix(p) * to_matrix(q), 1e-6));
    }
}

TEST_CASE("norm is multiplicative") {
    oracle::Random rng(32);
    for (int n = 0; n < 1000; ++n) {
        const Q p = rng.quaternion();
        const Q q = rng.quaternion();
        REQUIRE((p * q).norm_sq() == p.norm_sq() * q.norm_sq());
        REQUIRE(qconj(p * q) == qconj(q) * qconj(p));
        REQUIRE(p * qconj(p) == p.norm_sq() * Q::identity());
    }
}

TEST_CASE("quaternionic inner product is the Euclidean dot product") {
    oracle::Random rng(33);
    for (int n = 0; n < 1000; ++n) {
        const Q p = rng.quaternion();
        const Q q = rng.quaternion();
        REQUIRE(qinner(p, q) == p.coeffs().dot(q.coeffs()));
    }
}

TEST_CASE("pq maps of unit quaternions are isometries") {
    const auto units = catalog(QuaternionGroup::icosians);
    oracle::Random rng(34);
    for (int n = 0; n < 1000; ++n) {
        const Q x = rng.quaternion();
        const Q& p = units[static_cast<std::size_t>(rng.index(static_cast<int>(units.size())))];
        const Q& q = units[static_cast<std::size_t>(rng.index(static_cast<int>(units.size())))];
        REQUIRE(apply_pq(x, p, q, false).norm_sq() == x.norm_sq());
        REQUIRE(apply_pq(x, p, q, true).norm_sq() == x.norm_sq());
    }
}

TEST_CASE("rank-4 reflection equals -x conj(v) x") {
    const auto units = unite(catalog(QuaternionGroup::icosians), catalog(QuaternionGroup::hurwitz_duals));
    oracle::Random rng(35);
    for (int n = 0; n < 1000; ++n) {
        const Q v = rng.quaternion();
        const Q& x = units[static_cast<std::size_t>(rng.index(static_cast<int>(units.size())))];
        REQUIRE(Q(reflect_root<4>(v.coeffs(), x.coeffs())) == -(x * qconj(v) * x));
    }
}

TEST_CASE("spinor map is a homomorphism on all 16 basis pairs") {
    const MV basis[] = {MV::scalar(F(1)), MV::even(F(0), F(1), F(0), F(0)), MV::even(F(0), F(0), F(1), F(0)),
                        MV::even(F(0), F(0), F(0), F(1))};
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            REQUIRE(spinor_to_quaternion(a * b) == spinor_to_quaternion(a) * spinor_to_quaternion(b));
            REQUIRE(spinor_coordinates(a * b) == spinor_coordinates(b) * spinor_coordinates(a));
        }
    }
    CHECK(spinor_to_quaternion(MV::even(F(0), F(1), F(0), F(0))) == -Q::unit(1));
}

TEST_CASE("spinor map on random even elements") {
    oracle::Random rng(36);
    for (int n = 0; n < 1000; ++n) {
        const MV a = quaternion_to_spinor(rng.quaternion());
        const MV b = quaternion_to_spinor(rng.quaternion());
        REQUIRE(spinor_to_quaternion(a * b) == spinor_to_quaternion(a) * spinor_to_quaternion(b));
        REQUIRE(spinor_to_quaternion(reverse(a)) == qconj(spinor_to_quaternion(a)));
        REQUIRE(quaternion_to_spinor(spinor_to_quaternion(a)) == a);
    }
}

TEST_CASE("catalog sizes and unit norm") {
    CHECK(catalog(QuaternionGroup::lipschitz).size() == 8);
    CHECK(catalog(QuaternionGroup::hurwitz).size() == 24);
    CHECK(catalog(QuaternionGroup::hurwitz_duals).size() == 24);
    CHECK(catalog(QuaternionGroup::icosians).size() == 120);
    for (auto g : {QuaternionGroup::lipschitz, QuaternionGroup::hurwitz, QuaternionGroup::hurwitz_duals,
                   QuaternionGroup::icosians}) {
        for (const auto& q : catalog(g)) REQUIRE(q.norm_sq() == F(1));
    }
}

TEST_CASE("catalogs are groups") {
    CHECK(closed(catalog(QuaternionGroup::lipschitz)));
    CHECK(closed(catalog(QuaternionGroup::hurwitz)));
    CHECK(closed(catalog(QuaternionGroup::icosians)));
    CHECK_FALSE(closed(catalog(QuaternionGroup::hurwitz_duals)));
    CHECK(closed(unite(catalog(QuaternionGroup::hurwitz), catalog(QuaternionGroup::hurwitz_duals))));
}

TEST_CASE("icosians contain the Hurwitz units") {
    const auto ico = catalog(QuaternionGroup::icosians);
    const std::set<Q, QuaternionLess<F>> s(ico.begin(), ico.end());
    for (const auto& q : catalog(QuaternionGroup::hurwitz)) CHECK(s.count(q) == 1);
    const F h = F::ratio(1, 2);
    CHECK(s.count(Q(F(0), F::tau() * h, h, F::sigma() * h)) == 1);
    CHECK(s.count(Q(F(0), h, F::tau() * h, F::sigma() * h)) == 0);  // odd permutation
}
