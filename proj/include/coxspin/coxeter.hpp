#pragma once

// Root systems of the rank-3 Coxeter groups A1×A1×A1, A3, B3, H3, and of the
// rank-4 systems they induce.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "coxspin/clifford.hpp"
#include "coxspin/exactfield.hpp"
#include "coxspin/quaternion.hpp"

namespace coxspin {

template <int Rank>
using VectorN = Eigen::Matrix<FieldScalar, Rank, 1>;
using MatrixX = Eigen::Matrix<FieldScalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorX = Eigen::Matrix<FieldScalar, Eigen::Dynamic, 1>;

enum class CoxeterGroup { a1x3, a3, b3, h3 };

inline constexpr CoxeterGroup all_groups[] = {CoxeterGroup::a1x3, CoxeterGroup::a3, CoxeterGroup::b3,
                                              CoxeterGroup::h3};

/// Lowercase label used on the command line: "a1x3", "a3", "b3", "h3".
std::string_view label(CoxeterGroup g);
/// Conventional name: "A1xA1xA1", "A3", "B3", "H3".
std::string_view display_name(CoxeterGroup g);
std::optional<CoxeterGroup> parse_group(std::string_view s);

/// Thrown when a closure grows past its element cap.
class ClosureCapExceeded : public std::runtime_error {
public:
    explicit ClosureCapExceeded(std::size_t cap)
        : std::runtime_error("closure exceeded element cap of " + std::to_string(cap)) {}
};

inline constexpr std::size_t default_closure_cap = 10000;

struct SimpleRoots {
    CoxeterGroup group;
    std::vector<Vector3> roots;
};

/// The three unit simple roots of each rank-3 group.
SimpleRoots preset(CoxeterGroup g);

template <int Rank>
struct RootSystem {
    std::string group;
    std::vector<VectorN<Rank>> roots;  // sorted by CoordinateLess
    bool verified = false;

    std::size_t size() const { return roots.size(); }
    bool contains(const VectorN<Rank>& v) const;
};

using RootSystem3 = RootSystem<3>;
using RootSystem4 = RootSystem<4>;

/// Bilinear form used for rank-n reflections: Euclidean for rank 3, qinner for rank 4.
template <int Rank>
FieldScalar root_inner(const VectorN<Rank>& a, const VectorN<Rank>& b) {
    if constexpr (Rank == 4) {
        return qinner(QuaternionF(a), QuaternionF(b));
    } else {
        return a.dot(b);
    }
}

/// s_α(λ) = λ − 2(λ|α)/(α|α) α.
template <int Rank>
VectorN<Rank> reflect_root(const VectorN<Rank>& lambda, const VectorN<Rank>& alpha) {
    const FieldScalar aa = root_inner<Rank>(alpha, alpha);
    if (aa.is_zero()) throw std::invalid_argument("reflect_root: zero root");
    const FieldScalar k = FieldScalar(2) * root_inner<Rank>(lambda, alpha) / aa;
    return lambda - alpha * k;
}

/// Smallest set containing the seeds and closed under reflection in each of its members.
template <int Rank>
std::vector<VectorN<Rank>> reflection_closure(const std::vector<VectorN<Rank>>& seeds,
                                               std::size_t cap = default_closure_cap) {
    std::set<VectorN<Rank>, CoordinateLess> found;
    std::vector<VectorN<Rank>> order;
    std::vector<VectorN<Rank>> work;
    auto add = [&](const VectorN<Rank>& v) {
        if (found.insert(v).second) {
            if (found.size() > cap) throw ClosureCapExceeded(cap);
            order.push_back(v);
            work.push_back(v);
        }
    };
    for (const auto& s : seeds) {
        add(s);
        add(VectorN<Rank>(-s));
    }
    // Every new root reflects all known roots, and is reflected by all of them.
    while (!work.empty()) {
        const VectorN<Rank> v = work.back();
        work.pop_back();
        const std::size_t n = order.size();
        for (std::size_t i = 0; i < n; ++i) {
            const VectorN<Rank> u = order[i];
            add(reflect_root<Rank>(u, v));
            add(reflect_root<Rank>(v, u));
        }
    }
    return {found.begin(), found.end()};
}

RootSystem3 orbit_closure(const SimpleRoots& simple, std::size_t cap = default_closure_cap);

struct RootViolation {
    int axiom;  // 1: scalar multiples, 2: reflection invariance
    std::size_t first;
    std::size_t second;
    std::string message;
};

struct RootCertificate {
    bool pass = false;
    std::optional<RootViolation> witness;
};

/// Checks both root-system axioms exhaustively.
template <int Rank>
RootCertificate verify_root_system(const RootSystem<Rank>& rs);

extern template RootCertificate verify_root_system<3>(const RootSystem<3>&);
extern template RootCertificate verify_root_system<4>(const RootSystem<4>&);

struct CartanMatrix {
    MatrixX entries;
    /// m_ij from A_ij A_ji = 4cos²(kπ/m_ij), k coprime to m; 1 on the diagonal,
    /// 0 where no m ≤ 6 matches.
    Eigen::MatrixXi coxeter_exponents;
};

CartanMatrix cartan_matrix(const SimpleRoots& simple);

/// Exact solution of A x = b for square nonsingular A (Gauss–Jordan).
std::optional<VectorX> solve_exact(MatrixX a, VectorX b);

/// Expansion of a root in the simple roots.
std::optional<VectorX> simple_root_coefficients(const Vector3& root, const SimpleRoots& simple);

enum class CoefficientRing { integers, sqrt2_integers, golden_integers, none };

/// Smallest of Z, Z[√2], Z[τ] containing every Cartan entry, or none.
// Unit-length B3 roots give entries −√2, hence Z[√2] rather than Z.
CoefficientRing coefficient_ring(const SimpleRoots& simple);
bool in_ring(const FieldScalar& x, CoefficientRing ring);

/// Index of the first root whose simple-root coefficients are not all of one
/// sign or leave the coefficient ring; nullopt when every root passes.
std::optional<std::size_t> find_bad_simple_root_expansion(const RootSystem3& rs, const SimpleRoots& simple);

/// Number of distinct orthogonal transformations generated by the reflections.
std::size_t coxeter_group_order(const RootSystem3& rs);

}  // namespace coxspin
