#pragma once

// JSON forms. A FieldScalar is ["a","b","c","d"] with each rational written
// "p/q"; multivectors, quaternions and roots are arrays of those.

#include <json.hpp>

#include "coxspin/clifford.hpp"
#include "coxspin/coxeter.hpp"
#include "coxspin/exactfield.hpp"
#include "coxspin/quaternion.hpp"
#include "coxspin/spingroup.hpp"

namespace coxspin {

using Json = nlohmann::json;

Json to_json(const FieldScalar& x);
FieldScalar field_scalar_from_json(const Json& j);

Json to_json(const Multivector3& m);
Multivector3 multivector_from_json(const Json& j);

Json to_json(const QuaternionF& q);
QuaternionF quaternion_from_json(const Json& j);

template <int Rank>
Json to_json(const RootSystem<Rank>& rs) {
    Json roots = Json::array();
    for (const auto& r : rs.roots) {
        Json coords = Json::array();
        for (Eigen::Index i = 0; i < r.size(); ++i) coords.push_back(to_json(r[i]));
        roots.push_back(std::move(coords));
    }
    return {{"group", rs.group}, {"rank", Rank}, {"roots", std::move(roots)}, {"verified", rs.verified}};
}

/// Reads a RootSystem JSON document of the given rank; throws std::invalid_argument.
template <int Rank>
RootSystem<Rank> root_system_from_json(const Json& j);

extern template RootSystem<3> root_system_from_json<3>(const Json&);
extern template RootSystem<4> root_system_from_json<4>(const Json&);

Json to_json(const VersorCensus& c);

/// Export of a spinor pipeline: group, spinors, census, central inversion, rank-4 system.
Json spinor_report_json(const std::string& group, const SpinorSet& spinors, const VersorCensus& census,
                        const RootSystem4& rank4);

}  // namespace coxspin
