#include "coxspin/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxspin {

namespace {

const Json& expect_array(const Json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) {
        throw std::invalid_argument(std::string(what) + ": expected an array of " + std::to_string(n));
    }
    return j;
}

}  // namespace

Json to_json(const FieldScalar& x) {
    Json out = Json::array();
    for (const auto& r : x.coeffs()) out.push_back(rational_to_string(r));
    return out;
}

FieldScalar field_scalar_from_json(const Json& j) {
    expect_array(j, 4, "FieldScalar");
    std::array<Rational, 4> c;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_string()) throw std::invalid_argument("FieldScalar: components must be strings");
        c[i] = parse_rational(j[i].get<std::string>());
    }
    return {c[0], c[1], c[2], c[3]};
}

Json to_json(const Multivector3& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < 8; ++i) out.push_back(to_json(m.coeffs()[i]));
    return out;
}

Multivector3 multivector_from_json(const Json& j) {
    expect_array(j, 8, "Multivector3");
    Multivector3::Coeffs c;
    for (Eigen::Index i = 0; i < 8; ++i) c[i] = field_scalar_from_json(j[static_cast<std::size_t>(i)]);
    return Multivector3(c);
}

Json to_json(const QuaternionF& q) {
    Json out = Json::array();
    for (int i = 0; i < 4; ++i) out.push_back(to_json(q[i]));
    return out;
}

QuaternionF quaternion_from_json(const Json& j) {
    expect_array(j, 4, "Quaternion");
    return {field_scalar_from_json(j[0]), field_scalar_from_json(j[1]), field_scalar_from_json(j[2]),
            field_scalar_from_json(j[3])};
}

template <int Rank>
RootSystem<Rank> root_system_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("RootSystem: expected an object");
    for (const char* key : {"group", "rank", "roots", "verified"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("RootSystem: missing \"") + key + "\"");
    }
    if (!j["rank"].is_number_integer() || j["rank"].get<int>() != Rank) {
        throw std::invalid_argument("RootSystem: rank must be " + std::to_string(Rank));
    }
    if (!j["group"].is_string() || !j["verified"].is_boolean() || !j["roots"].is_array()) {
        throw std::invalid_argument("RootSystem: malformed fields");
    }
    RootSystem<Rank> rs;
    rs.group = j["group"].get<std::string>();
    rs.verified = j["verified"].get<bool>();
    for (const auto& r : j["roots"]) {
        expect_array(r, Rank, "root");
        VectorN<Rank> v;
        for (int i = 0; i < Rank; ++i) v[i] = field_scalar_from_json(r[static_cast<std::size_t>(i)]);
        rs.roots.push_back(v);
    }
    std::sort(rs.roots.begin(), rs.roots.end(), CoordinateLess{});
    return rs;
}

template RootSystem<3> root_system_from_json<3>(const Json&);
template RootSystem<4> root_system_from_json<4>(const Json&);

Json to_json(const VersorCensus& c) {
    Json by_order = Json::object();
    for (const auto& [order, count] : c.rotations_by_order) by_order[std::to_string(order)] = count;
    return {{"versors", c.versors},
            {"even_versors", c.even_versors},
            {"odd_versors", c.odd_versors},
            {"transformations", c.transformations},
            {"rotations", c.rotations},
            {"rotations_by_order", std::move(by_order)},
            {"reflections", c.reflections},
            {"rotoinversions", c.rotoinversions},
            {"odd_transformations", c.odd_transformations},
            {"identity", c.identity},
            {"central_inversion", c.central_inversion}};
}

Json spinor_report_json(const std::string& group, const SpinorSet& spinors, const VersorCensus& census,
                        const RootSystem4& rank4) {
    Json qs = Json::array();
    for (const auto& q : spinors.quaternions()) qs.push_back(to_json(q));
    return {{"group", group},
            {"spinors", std::move(qs)},
            {"versor_census", to_json(census)},
            {"central_inversion", census.central_inversion},
            {"rank4", to_json(rank4)}};
}

}  // namespace coxspin
