#include "coxspin/coxeter.hpp"

#include <algorithm>

namespace coxspin {

namespace {

using F = FieldScalar;

F inv_sqrt2() { return F::sqrt2() * F::ratio(1, 2); }

Vector3 vec(F x, F y, F z) { return {std::move(x), std::move(y), std::move(z)}; }

}  // namespace

std::string_view label(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return "a1x3";
        case CoxeterGroup::a3: return "a3";
        case CoxeterGroup::b3: return "b3";
        case CoxeterGroup::h3: return "h3";
    }
    return "unknown";
}

std::string_view display_name(CoxeterGroup g) {
    switch (g) {
        case CoxeterGroup::a1x3: return "A1xA1xA1";
        case CoxeterGroup::a3: return "A3";
        case CoxeterGroup::b3: return "B3";
        case CoxeterGroup::h3: return "H3";
    }
    return "unknown";
}

std::optional<CoxeterGroup> parse_group(std::string_view s) {
    for (CoxeterGroup g : all_groups) {
        if (label(g) == s) return g;
    }
    return std::nullopt;
}

SimpleRoots preset(CoxeterGroup g) {
    const F r = inv_sqrt2();
    const F h = F::ratio(1, 2);
    switch (g) {
        case CoxeterGroup::a1x3:
            return {g, {vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)}};
        case CoxeterGroup::a3:
            return {g, {vec(r, r, 0), vec(0, -r, r), vec(-r, r, 0)}};
        case CoxeterGroup::b3:
            return {g, {vec(r, -r, 0), vec(0, r, -r), vec(0, 0, 1)}};
        case CoxeterGroup::h3:
            return {g, {vec(-1, 0, 0), vec(F::tau() * h, h, F::sigma() * h), vec(0, 0, -1)}};
    }
    throw std::invalid_argument("unknown Coxeter group");
}

template <int Rank>
bool RootSystem<Rank>::contains(const VectorN<Rank>& v) const {
    return std::binary_search(roots.begin(), roots.end(), v, CoordinateLess{});
}

template struct RootSystem<3>;
template struct RootSystem<4>;

RootSystem3 orbit_closure(const SimpleRoots& simple, std::size_t cap) {
    if (simple.roots.empty()) throw std::invalid_argument("orbit_closure: no simple roots");
    RootSystem3 rs;
    rs.group = std::string(label(simple.group));
    rs.roots = reflection_closure<3>(simple.roots, cap);
    return rs;
}

template <int Rank>
RootCertificate verify_root_system(const RootSystem<Rank>& rs) {
    RootSystem<Rank> sorted = rs;
    std::sort(sorted.roots.begin(), sorted.roots.end(), CoordinateLess{});
    const auto& roots = rs.roots;
    const std::size_t n = roots.size();
    std::vector<F> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        norms[i] = root_inner<Rank>(roots[i], roots[i]);
        if (norms[i].is_zero()) return {false, RootViolation{1, i, i, "zero vector in root set"}};
    }
    // Axiom 1: parallel roots must be negatives of each other.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const F d = root_inner<Rank>(roots[i], roots[j]);
            if (d * d != norms[i] * norms[j]) continue;
            if (roots[j] != VectorN<Rank>(-roots[i])) {
                return {false, RootViolation{1, i, j, "roots are parallel but not negatives"}};
            }
        }
    }
    // Axiom 2: s_α Φ = Φ.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t l = 0; l < n; ++l) {
            if (!sorted.contains(reflect_root<Rank>(roots[l], roots[a]))) {
                return {false, RootViolation{2, a, l, "reflection of a root leaves the set"}};
            }
        }
    }
    return {true, std::nullopt};
}

template RootCertificate verify_root_system<3>(const RootSystem<3>&);
template RootCertificate verify_root_system<4>(const RootSystem<4>&);

CartanMatrix cartan_matrix(const SimpleRoots& simple) {
    const auto n = static_cast<Eigen::Index>(simple.roots.size());
    CartanMatrix cm;
    cm.entries = MatrixX(n, n);
    cm.coxeter_exponents = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& ai = simple.roots[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& aj = simple.roots[static_cast<std::size_t>(j)];
            cm.entries(i, j) = F(2) * ai.dot(aj) / ai.dot(ai);
        }
    }
    // 4cos²(kπ/m) for m = 2..6; 2π/5 appears between two of the H3 roots.
    const std::pair<F, int> four_cos_sq[] = {
        {F(0), 2}, {F(1), 3}, {F(2), 4}, {F::tau() + F(1), 5}, {F(2) - F::tau(), 5}, {F(3), 6}};
    for (Eigen::Index i = 0; i < n; ++i) {
        cm.coxeter_exponents(i, i) = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const F prod = cm.entries(i, j) * cm.entries(j, i);
            for (const auto& [value, m] : four_cos_sq) {
                if (prod == value) cm.coxeter_exponents(i, j) = m;
            }
        }
    }
    return cm;
}

std::optional<VectorX> solve_exact(MatrixX a, VectorX b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b[pivot], b[col]);
        }
        const F inv = inverse(a(col, col));
        a.row(col) *= inv;
        b[col] *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const F factor = a(r, col);
            a.row(r) -= a.row(col) * factor;
            b[r] -= b[col] * factor;
        }
    }
    return b;
}

std::optional<VectorX> simple_root_coefficients(const Vector3& root, const SimpleRoots& simple) {
    const auto n = static_cast<Eigen::Index>(simple.roots.size());
    if (n != 3) return std::nullopt;
    MatrixX basis(3, 3);
    for (Eigen::Index j = 0; j < 3; ++j) basis.col(j) = simple.roots[static_cast<std::size_t>(j)];
    return solve_exact(basis, VectorX(root));
}

bool in_ring(const F& x, CoefficientRing ring) {
    switch (ring) {
        case CoefficientRing::integers: return is_integer(x);
        case CoefficientRing::sqrt2_integers:
            return sgn(x.coeff(2)) == 0 && sgn(x.coeff(3)) == 0 && x.coeff(0).get_den() == 1 &&
                   x.coeff(1).get_den() == 1;
        case CoefficientRing::golden_integers: return in_golden_integers(x);
        case CoefficientRing::none: return false;
    }
    return false;
}

CoefficientRing coefficient_ring(const SimpleRoots& simple) {
    const auto cm = cartan_matrix(simple);
    for (CoefficientRing ring :
         {CoefficientRing::integers, CoefficientRing::sqrt2_integers, CoefficientRing::golden_integers}) {
        bool all = true;
        for (Eigen::Index i = 0; i < cm.entries.size() && all; ++i) all = in_ring(cm.entries(i), ring);
        if (all) return ring;
    }
    return CoefficientRing::none;
}

std::optional<std::size_t> find_bad_simple_root_expansion(const RootSystem3& rs, const SimpleRoots& simple) {
    const CoefficientRing ring = coefficient_ring(simple);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const auto coeffs = simple_root_coefficients(rs.roots[i], simple);
        if (!coeffs) return i;
        bool any_pos = false;
        bool any_neg = false;
        for (Eigen::Index k = 0; k < coeffs->size(); ++k) {
            const F& c = (*coeffs)[k];
            if (!in_ring(c, ring)) return i;
            const Sign s = sign_of(c);
            any_pos |= s == Sign::positive;
            any_neg |= s == Sign::negative;
        }
        if (any_pos && any_neg) return i;
    }
    return std::nullopt;
}

}  // namespace coxspin
