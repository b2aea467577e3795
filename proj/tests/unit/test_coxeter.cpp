#include <doctest.h>

#include <set>

#include "coxspin/coxeter.hpp"
#include "support/oracles.hpp"

using namespace coxspin;
using F = FieldScalar;
using RootSet = std::set<Vector3, CoordinateLess>;

namespace {

RootSet as_set(const RootSystem3& rs) { return {rs.roots.begin(), rs.roots.end()}; }

RootSet unite(RootSet a, const RootSet& b) {
    a.insert(b.begin(), b.end());
    return a;
}

const F r = F::sqrt2() * F::ratio(1, 2);

}  // namespace

TEST_CASE("presets are unit vectors") {
    for (CoxeterGroup g : all_groups) {
        for (const auto& a : preset(g).roots) CHECK(a.dot(a) == F(1));
    }
}

TEST_CASE("orbit closures are the expected polyhedra") {
    CHECK(as_set(orbit_closure(preset(CoxeterGroup::a1x3))) == oracle::octahedron());
    CHECK(as_set(orbit_closure(preset(CoxeterGroup::a3))) == oracle::cuboctahedron());
    CHECK(as_set(orbit_closure(preset(CoxeterGroup::b3))) == unite(oracle::octahedron(), oracle::cuboctahedron()));
    CHECK(as_set(orbit_closure(preset(CoxeterGroup::h3))) == oracle::icosidodecahedron());
}

TEST_CASE("root counts and both axioms") {
    const std::size_t expected[] = {6, 12, 18, 30};
    int i = 0;
    for (CoxeterGroup g : all_groups) {
        const auto rs = orbit_closure(preset(g));
        CHECK(rs.size() == expected[i++]);
        CHECK(rs.group == std::string(label(g)));
        CHECK(verify_root_system(rs).pass);
    }
}

TEST_CASE("verification rejects bad sets with a witness") {
    RootSystem3 doubled;
    const Vector3 a(F(1), F(0), F(0));
    doubled.roots = {a, Vector3(a * F(2)), Vector3(-a), Vector3(a * F(-2))};
    auto cert = verify_root_system(doubled);
    CHECK_FALSE(cert.pass);
    REQUIRE(cert.witness);
    CHECK(cert.witness->axiom == 1);

    RootSystem3 open;
    const Vector3 d(r, r, F(0));
    open.roots = {a, Vector3(-a), d, Vector3(-d)};
    cert = verify_root_system(open);
    CHECK_FALSE(cert.pass);
    REQUIRE(cert.witness);
    CHECK(cert.witness->axiom == 2);

    RootSystem3 zero;
    zero.roots = {Vector3(Vector3::Zero())};
    CHECK_FALSE(verify_root_system(zero).pass);
}

TEST_CASE("closure cap") {
    // cos θ = 3/5 is not of finite order, so the orbit is infinite.
    const std::vector<Vector3> seeds{Vector3(F(1), F(0), F(0)), Vector3(F::ratio(3, 5), F::ratio(4, 5), F(0))};
    CHECK_THROWS_AS(reflection_closure<3>(seeds, 200), ClosureCapExceeded);
    CHECK_THROWS_AS(orbit_closure(preset(CoxeterGroup::h3), 20), ClosureCapExceeded);
    CHECK_THROWS_AS(orbit_closure(SimpleRoots{CoxeterGroup::a3, {}}), std::invalid_argument);
}

TEST_CASE("worked reflections") {
    CHECK(reflect(Vector3(F(1), F(0), F(0)), Vector3(F(0), F(1), F(0))) == Vector3(F(1), F(0), F(0)));
    // A3: −α2 α1 α2 with (α1|α2) = −½ is α1 + α2. The printed derivation drops the
    // leading minus and lands on the antipode.
    const Vector3 a1(r, r, F(0));
    const Vector3 a2(F(0), -r, r);
    const Vector3 v = reflect(a1, a2);
    CHECK(v == Vector3(a1 + a2));
    CHECK(v == Vector3(r, F(0), r));
    CHECK(reflect(Vector3(-a1), a2) == Vector3(-r, F(0), -r));
    // B3: α1 in α2, and α3 in α2.
    CHECK(reflect(Vector3(r, -r, F(0)), Vector3(F(0), r, -r)) == Vector3(r, F(0), -r));
    CHECK(reflect(Vector3(F(0), F(0), F(1)), Vector3(F(0), r, -r)) == Vector3(F(0), F(1), F(0)));
    CHECK(reflect_root<3>(Vector3(F(0), F(0), F(1)), Vector3(F(0), F(1), F(-1))) == Vector3(F(0), F(1), F(0)));
}

TEST_CASE("Cartan matrices") {
    const auto a3 = cartan_matrix(preset(CoxeterGroup::a3));
    // (α1|α2) = ½(1,1,0)·(0,−1,1) = −½, so A12 = −1.
    CHECK(a3.entries(0, 1) == F(-1));
    for (int i = 0; i < 3; ++i) CHECK(a3.entries(i, i) == F(2));
    for (Eigen::Index i = 0; i < 9; ++i) CHECK(is_integer(a3.entries(i)));

    const auto h3 = cartan_matrix(preset(CoxeterGroup::h3));
    // (α1|α2) = (−1)(τ/2) = −τ/2, so A12 = −τ.
    CHECK(h3.entries(0, 1) == -F::tau());
    CHECK(h3.entries(1, 0) == -F::tau());
    CHECK(h3.entries(1, 2) == -F::sigma());
    for (Eigen::Index i = 0; i < 9; ++i) CHECK(in_golden_integers(h3.entries(i)));
    CHECK(coefficient_ring(preset(CoxeterGroup::h3)) == CoefficientRing::golden_integers);
    CHECK(h3.coxeter_exponents(0, 1) == 5);
    CHECK(h3.coxeter_exponents(0, 2) == 2);

    const auto b3 = cartan_matrix(preset(CoxeterGroup::b3));
    CHECK(b3.entries(0, 1) == F(-1));
    CHECK(b3.entries(1, 2) == -F::sqrt2());
    CHECK(b3.entries(2, 1) == -F::sqrt2());
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(is_integer(b3.entries(i, j) * b3.entries(j, i)));
    }
    CHECK(b3.coxeter_exponents(1, 2) == 4);
    CHECK(b3.coxeter_exponents(0, 1) == 3);
    CHECK(coefficient_ring(preset(CoxeterGroup::b3)) == CoefficientRing::sqrt2_integers);

    const auto a1 = cartan_matrix(preset(CoxeterGroup::a1x3));
    CHECK(a1.entries == MatrixX(2 * MatrixX::Identity(3, 3)));
    CHECK(a1.coxeter_exponents(0, 1) == 2);
}

TEST_CASE("exact linear solve") {
    MatrixX a(2, 2);
    a << F(1), F::sqrt2(), F::tau(), F(3);
    VectorX x(2);
    x << F::ratio(2, 3), F::sqrt5();
    const auto sol = solve_exact(a, VectorX(a * x));
    REQUIRE(sol);
    CHECK(*sol == x);
    MatrixX singular(2, 2);
    singular << F(1), F(2), F(2), F(4);
    CHECK_FALSE(solve_exact(singular, x).has_value());
}

TEST_CASE("simple-root expansions") {
    for (CoxeterGroup g : {CoxeterGroup::a1x3, CoxeterGroup::a3, CoxeterGroup::b3}) {
        CAPTURE(label(g));
        CHECK_FALSE(find_bad_simple_root_expansion(orbit_closure(preset(g)), preset(g)).has_value());
    }
    for (CoxeterGroup g : {CoxeterGroup::a1x3, CoxeterGroup::a3}) {
        CHECK(coefficient_ring(preset(g)) == CoefficientRing::integers);
    }
    // (1,0,0) = √2 α1 + √2 α2 + α3 in B3.
    const auto c = simple_root_coefficients(Vector3(F(1), F(0), F(0)), preset(CoxeterGroup::b3));
    REQUIRE(c);
    CHECK((*c)[0] == F::sqrt2());
    CHECK((*c)[1] == F::sqrt2());
    CHECK((*c)[2] == F(1));
}

TEST_CASE("H3 preset is not a simple system") {
    const auto simple = preset(CoxeterGroup::h3);
    const auto rs = orbit_closure(simple);
    const auto bad = find_bad_simple_root_expansion(rs, simple);
    REQUIRE(bad.has_value());
    const auto c = simple_root_coefficients(rs.roots[*bad], simple);
    REQUIRE(c);
    bool pos = false;
    bool neg = false;
    for (Eigen::Index k = 0; k < 3; ++k) {
        pos |= sign_of((*c)[k]) == Sign::positive;
        neg |= sign_of((*c)[k]) == Sign::negative;
    }
    CHECK((pos && neg));
    // (α2|α3) > 0: the pair spans an acute angle.
    CHECK(sign_of(simple.roots[1].dot(simple.roots[2])) == Sign::positive);
}

TEST_CASE("a genuine H3 simple system expands with uniform golden coefficients") {
    const auto literal = preset(CoxeterGroup::h3);
    const SimpleRoots fixed{CoxeterGroup::h3, {literal.roots[0], literal.roots[1], Vector3(F(0), F(-1), F(0))}};
    const auto cm = cartan_matrix(fixed);
    CHECK(cm.entries(0, 1) == -F::tau());
    CHECK(cm.entries(1, 2) == F(-1));
    CHECK(cm.coxeter_exponents(0, 1) == 5);
    CHECK(cm.coxeter_exponents(1, 2) == 3);
    const auto rs = orbit_closure(fixed);
    CHECK(as_set(rs) == oracle::icosidodecahedron());
    CHECK_FALSE(find_bad_simple_root_expansion(rs, fixed).has_value());
}

TEST_CASE("group labels") {
    CHECK(parse_group("h3") == CoxeterGroup::h3);
    CHECK_FALSE(parse_group("H3").has_value());
    CHECK_FALSE(parse_group("xyz").has_value());
    CHECK(display_name(CoxeterGroup::a1x3) == "A1xA1xA1");
}

TEST_CASE("Weyl group orders match the reflection-matrix group") {
    const std::size_t expected[] = {8, 24, 48, 120};
    int i = 0;
    for (CoxeterGroup g : all_groups) {
        const auto rs = orbit_closure(preset(g));
        const auto mats = oracle::reflection_group(preset(g).roots);
        CHECK(mats.size() == expected[i++]);
        CHECK(coxeter_group_order(rs) == mats.size());
    }
}
