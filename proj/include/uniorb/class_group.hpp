#pragma once

#include "uniorb/fan.hpp"
#include "uniorb/radiance.hpp"

#include <vector>

namespace uniorb {

struct ClassGroupInfo {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion_invariants; // each > 1
};

/// Cokernel of M -> Z^d, m -> (<m, n_ρ>)_ρ.
inline ClassGroupInfo class_group(const Fan& fan) {
    IntMat pairing = IntMat::from_rows(fan.rays(), fan.dim());
    SmithForm snf = smith_normal_form(pairing);
    ClassGroupInfo info;
    std::vector<BigInt> factors = snf.invariant_factors();
    info.free_rank = fan.ray_count() - factors.size();
    for (const auto& d : factors)
        if (d > 1)
            info.torsion_invariants.push_back(d);
    return info;
}

/// Divisor classes in the basis [D_τ1], ..., [D_τk] of a radiant fan.
struct ClassTable {
    std::size_t k = 0;
    std::vector<IntVec> class_of; // indexed by ray

    const IntVec& operator[](std::size_t ray) const { return class_of.at(ray); }
    std::size_t ray_count() const noexcept { return class_of.size(); }
};

inline ClassTable radiant_classes(const Fan& fan, const BilateralStructure& bilateral) {
    ClassTable table;
    table.k = bilateral.negative.size();
    table.class_of.assign(fan.ray_count(), IntVec(table.k));
    for (std::size_t j = 0; j < table.k; ++j)
        table.class_of[bilateral.negative[j]][j] = 1;
    // [D_εi] = -sum_j <e^i, n_j> [D_τj]
    for (std::size_t i = 0; i < bilateral.positive.size(); ++i) {
        const IntVec dual = bilateral.dual_basis.row(i);
        IntVec& cls = table.class_of[bilateral.positive[i]];
        for (std::size_t j = 0; j < table.k; ++j)
            cls[j] = -dot(dual, fan.ray(bilateral.negative[j]));
    }
    return table;
}

/// Exactness check: sum_ρ <m, n_ρ> [D_ρ] == 0 for every basis vector m of M.
inline bool class_relations_hold(const Fan& fan, const ClassTable& table) {
    for (std::size_t c = 0; c < fan.dim(); ++c) {
        IntVec total(table.k);
        for (std::size_t r = 0; r < fan.ray_count(); ++r)
            for (std::size_t j = 0; j < table.k; ++j)
                total[j] += fan.ray(r)[c] * table[r][j];
        if (!is_zero(total))
            return false;
    }
    return true;
}

} // namespace uniorb
