#include "coxspin/quaternion.hpp"

#include <algorithm>
#include <array>

namespace coxspin {

namespace {

using F = FieldScalar;

bool is_even_permutation(const std::array<int, 4>& p) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
        }
    }
    return inversions % 2 == 0;
}

void add_lipschitz(std::vector<QuaternionF>& out) {
    for (int i = 0; i < 4; ++i) {
        for (int s : {1, -1}) {
            QuaternionF q;
            q[i] = F(s);
            out.push_back(q);
        }
    }
}

void add_half_units(std::vector<QuaternionF>& out) {
    const F h = F::ratio(1, 2);
    for (int mask = 0; mask < 16; ++mask) {
        QuaternionF q;
        for (int i = 0; i < 4; ++i) q[i] = (mask & (1 << i)) ? -h : h;
        out.push_back(q);
    }
}

}  // namespace

std::string_view to_string(QuaternionGroup g) {
    switch (g) {
        case QuaternionGroup::lipschitz: return "lipschitz";
        case QuaternionGroup::hurwitz: return "hurwitz";
        case QuaternionGroup::hurwitz_duals: return "hurwitz_duals";
        case QuaternionGroup::icosians: return "icosians";
    }
    return "unknown";
}

std::vector<QuaternionF> sorted_unique(std::vector<QuaternionF> qs) {
    std::sort(qs.begin(), qs.end(), QuaternionLess<F>{});
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

std::vector<QuaternionF> catalog(QuaternionGroup g) {
    std::vector<QuaternionF> out;
    switch (g) {
        case QuaternionGroup::lipschitz:
            add_lipschitz(out);
            break;
        case QuaternionGroup::hurwitz:
            add_lipschitz(out);
            add_half_units(out);
            break;
        case QuaternionGroup::hurwitz_duals: {
            // (1/√2)(±1, ±1, 0, 0) and permutations.
            const F r = F::sqrt2() * F::ratio(1, 2);
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j) {
                    for (int si : {1, -1}) {
                        for (int sj : {1, -1}) {
                            QuaternionF q;
                            q[i] = F(si) * r;
                            q[j] = F(sj) * r;
                            out.push_back(q);
                        }
                    }
                }
            }
            break;
        }
        case QuaternionGroup::icosians: {
            add_lipschitz(out);
            add_half_units(out);
            // ½(0, ±τ, ±1, ±σ) under even permutations of the four positions.
            const F h = F::ratio(1, 2);
            const std::array<F, 4> base{F(0), F::tau() * h, h, F::sigma() * h};
            std::array<int, 4> perm{0, 1, 2, 3};
            do {
                if (!is_even_permutation(perm)) continue;
                for (int mask = 0; mask < 8; ++mask) {
                    QuaternionF q;
                    for (std::size_t k = 0; k < 4; ++k) {
                        F v = base[k];
                        if (k > 0 && (mask & (1 << (k - 1)))) v = -v;
                        q[perm[k]] = v;
                    }
                    out.push_back(q);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
    }
    return sorted_unique(std::move(out));
}

}  // namespace coxspin
