#include "coxspin/spingroup.hpp"

#include <algorithm>
#include <set>

#include <Eigen/LU>

namespace coxspin {

namespace {

using F = FieldScalar;
using MV = Multivector3;

struct MatrixLess {
    bool operator()(const Matrix3& a, const Matrix3& b) const { return CoordinateLess{}(a, b); }
};

std::vector<MV> sorted_unique(std::vector<MV> v) {
    std::sort(v.begin(), v.end(), MultivectorLess<F>{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_reflection(const Matrix3& m) {
    // Odd with eigenvalues (1, 1, −1).
    return m.trace() == F(1) && m * m == Matrix3::Identity();
}

}  // namespace

std::size_t VersorGroup::count(Parity p) const {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [p](const Versor& v) { return v.parity == p; }));
}

std::vector<Matrix3> VersorGroup::transformations() const {
    std::set<Matrix3, MatrixLess> distinct(induced.begin(), induced.end());
    return {distinct.begin(), distinct.end()};
}

bool SpinorSet::contains(const MV& r) const {
    return std::binary_search(rotors.begin(), rotors.end(), r, MultivectorLess<F>{});
}

std::vector<QuaternionF> SpinorSet::quaternions() const {
    std::vector<QuaternionF> out;
    out.reserve(rotors.size());
    for (const auto& r : rotors) out.push_back(spinor_to_quaternion(r));
    return coxspin::sorted_unique(std::move(out));
}

std::vector<MV> multiplicative_closure(const std::vector<MV>& generators, std::size_t cap) {
    std::set<MV, MultivectorLess<F>> found{MV::scalar(F(1))};
    std::vector<MV> work{MV::scalar(F(1))};
    while (!work.empty()) {
        const MV x = work.back();
        work.pop_back();
        for (const auto& g : generators) {
            MV y = x * g;
            if (found.insert(y).second) {
                if (found.size() > cap) throw ClosureCapExceeded(cap);
                work.push_back(std::move(y));
            }
        }
    }
    return {found.begin(), found.end()};
}

MV normalize_versor(const MV& a) {
    const auto mag = versor_magnitude_sq(a);
    if (!mag || mag->is_zero()) throw std::invalid_argument("normalize_versor: not an invertible versor");
    if (*mag == F(1)) return a;
    const auto len = sqrt_in_field(*mag);
    if (!len) throw NotInField("versor magnitude has no square root in the field");
    return a * inverse(*len);
}

std::vector<MV> pairwise_rotors(const RootSystem3& rs) {
    std::vector<MV> out;
    out.reserve(rs.roots.size() * rs.roots.size());
    for (const auto& a : rs.roots) {
        const MV ma = MV::vector(a);
        for (const auto& b : rs.roots) out.push_back(normalize_versor(ma * MV::vector(b)));
    }
    return sorted_unique(std::move(out));
}

SpinorSet generate_rotors(const RootSystem3& rs) {
    return {multiplicative_closure(pairwise_rotors(rs))};
}

SpinorSet generate_from_two(const SimpleRoots& simple, std::size_t cap) {
    if (simple.roots.size() != 3) throw std::invalid_argument("generate_from_two: need three simple roots");
    const MV a1 = MV::vector(simple.roots[0]);
    const MV a2 = MV::vector(simple.roots[1]);
    const MV a3 = MV::vector(simple.roots[2]);
    const MV r1 = normalize_versor(a1 * a2);
    const MV r2 = normalize_versor(a2 * a3);
    return {multiplicative_closure({r1, r2, reverse(r1), reverse(r2)}, cap)};
}

VersorGroup generate_versor_group(const RootSystem3& rs, std::size_t cap) {
    std::vector<MV> gens;
    gens.reserve(rs.roots.size());
    for (const auto& a : rs.roots) gens.push_back(normalize_versor(MV::vector(a)));
    VersorGroup vg;
    for (auto& v : multiplicative_closure(gens, cap)) {
        const auto p = v.parity();
        if (!p) throw std::logic_error("versor closure produced a mixed-parity element");
        vg.induced.push_back(induced_matrix(v, *p));
        vg.elements.push_back({std::move(v), *p});
    }
    return vg;
}

int matrix_order(const Matrix3& m, int cap) {
    const Matrix3 id = Matrix3::Identity();
    Matrix3 p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = (p * m).eval();
    }
    throw std::runtime_error("matrix_order: order exceeds cap");
}

VersorCensus classify_versors(const VersorGroup& vg) {
    VersorCensus c;
    c.versors = vg.size();
    c.even_versors = vg.count(Parity::even);
    c.odd_versors = vg.count(Parity::odd);

    std::map<Matrix3, Parity, MatrixLess> parity_of;
    for (std::size_t i = 0; i < vg.size(); ++i) parity_of.emplace(vg.induced[i], vg.elements[i].parity);

    const Matrix3 id = Matrix3::Identity();
    const Matrix3 minus_id = -Matrix3::Identity();
    c.transformations = parity_of.size();
    for (const auto& [m, parity] : parity_of) {
        const F det = m.determinant();
        if (det != F(parity == Parity::even ? 1 : -1)) {
            throw std::logic_error("induced matrix determinant disagrees with versor parity");
        }
        if (m == id) c.identity = true;
        if (m == minus_id) c.central_inversion = true;
        if (parity == Parity::even) {
            ++c.rotations;
            ++c.rotations_by_order[matrix_order(m)];
        } else {
            ++c.odd_transformations;
            if (is_reflection(m)) {
                ++c.reflections;
            } else {
                ++c.rotoinversions;
            }
        }
    }
    return c;
}

PureQuaternionVerdict check_pure_quaternion_subrootsystem(const RootSystem3& rs, const SpinorSet& spinors,
                                                          const VersorGroup& versors) {
    PureQuaternionVerdict v;
    v.holds = true;
    for (const auto& a : rs.roots) {
        const MV dual = hodge_dual(a);
        if (!spinors.contains(dual)) {
            v.holds = false;
            v.witness = dual;
            break;
        }
    }
    const Matrix3 minus_id = -Matrix3::Identity();
    for (std::size_t i = 0; i < versors.size(); ++i) {
        if (versors.induced[i] == minus_id) {
            v.central_inversion = true;
            if (v.holds) v.witness = versors.elements[i].value;
            break;
        }
    }
    v.biconditional = v.holds == v.central_inversion;
    return v;
}

PureQuaternionVerdict check_pure_quaternion_subrootsystem(const RootSystem3& rs) {
    return check_pure_quaternion_subrootsystem(rs, generate_rotors(rs), generate_versor_group(rs));
}

std::string rank4_label(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return "A1x4";
        case CoxeterGroup::a3: return "D4";
        case CoxeterGroup::b3: return "F4";
        case CoxeterGroup::h3: return "H4";
    }
    return "unknown";
}

std::string binary_group_name(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return "Q";
        case CoxeterGroup::a3: return "2T";
        case CoxeterGroup::b3: return "2O";
        case CoxeterGroup::h3: return "2I";
    }
    return "unknown";
}

std::vector<QuaternionF> expected_catalog(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return catalog(QuaternionGroup::lipschitz);
        case CoxeterGroup::a3: return catalog(QuaternionGroup::hurwitz);
        case CoxeterGroup::b3: {
            auto out = catalog(QuaternionGroup::hurwitz);
            const auto duals = catalog(QuaternionGroup::hurwitz_duals);
            out.insert(out.end(), duals.begin(), duals.end());
            return coxspin::sorted_unique(std::move(out));
        }
        case CoxeterGroup::h3: return catalog(QuaternionGroup::icosians);
    }
    return {};
}

RootSystem4 induce_rank4(const SpinorSet& ss, const std::string& group_label) {
    RootSystem4 rs;
    rs.group = group_label;
    for (const auto& q : ss.quaternions()) rs.roots.push_back(q.coeffs());
    const auto cert = verify_root_system(rs);
    if (!cert.pass) {
        throw RootSystemViolation("induced " + group_label + " set is not a root system: " + cert.witness->message);
    }
    rs.verified = true;
    return rs;
}

ReflectionEquivalence quaternion_reflection_equivalence(const Vector3& v, const Vector3& a) {
    const QuaternionF x = spinor_to_quaternion(hodge_dual(a));
    const QuaternionF vq = spinor_to_quaternion(hodge_dual(v));
    ReflectionEquivalence out;
    out.quaternionic = -(x * qconj(vq) * x);
    out.geometric = spinor_to_quaternion(hodge_dual(reflect(v, a)));
    out.equal = out.quaternionic == out.geometric;
    return out;
}

std::size_t coxeter_group_order(const RootSystem3& rs) { return generate_versor_group(rs).transformations().size(); }

}  // namespace coxspin
