#pragma once

// Demazure roots, the unipotent direction v, and the precedence order on rays.

#include "uniorb/class_group.hpp"
#include "uniorb/radiance.hpp"

#include <set>
#include <utility>
#include <vector>

namespace uniorb {

enum class RootKind { Semisimple, Unipotent };

struct DemazureRoot {
    IntVec e;                      // in M, standard coordinates
    std::size_t distinguished_ray; // <e, n_ρ> == -1
    RootKind kind = RootKind::Unipotent;
    bool in_u = false;
};

/// Roots at a single ray: <e, n_ρ> = -1 and <e, n_ρ'> >= 0 elsewhere.
inline LinearSystem root_system_at(const Fan& fan, std::size_t ray) {
    LinearSystem sys(fan.dim());
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        if (r == ray)
            sys.equal(fan.ray(r), -1);
        else
            sys.at_least(fan.ray(r), 0);
    }
    return sys;
}

/// Sorted by (ray, e). Semisimple roots are exactly those whose negative
/// is also a root. `in_u` is set for unipotent roots only; see mark_in_u.
inline std::vector<DemazureRoot> enumerate_roots(const Fan& fan) {
    std::vector<DemazureRoot> roots;
    for (std::size_t r = 0; r < fan.ray_count(); ++r)
        for (auto& e : lattice_points(root_system_at(fan, r)))
            roots.push_back({std::move(e), r, RootKind::Unipotent, false});
    std::set<IntVec> all;
    for (const auto& root : roots)
        all.insert(root.e);
    for (auto& root : roots) {
        root.kind = all.count(negated(root.e)) ? RootKind::Semisimple : RootKind::Unipotent;
        root.in_u = root.kind == RootKind::Unipotent;
    }
    return roots;
}

struct UnipotentChoice {
    IntVec v;                  // in N, standard coordinates
    IntVec basis_coordinates;  // (-1, -c, -c^2, ...)
    BigInt c;
};

/// Smallest c >= 2 for which v = (-1, -c, ..., -c^{n-1}) in the positive
/// basis pairs nonzero with every semisimple root.
inline UnipotentChoice choose_v(const Fan& fan, const BilateralStructure& bilateral,
                                const std::vector<DemazureRoot>& roots) {
    const std::size_t n = fan.dim();
    for (BigInt c = 2;; ++c) {
        IntVec coords(n);
        BigInt power = 1;
        for (std::size_t i = 0; i < n; ++i) {
            coords[i] = -power;
            power *= c;
        }
        IntVec v = bilateral.from_coordinates(coords);
        bool ok = true;
        for (const auto& root : roots)
            if (root.kind == RootKind::Semisimple && dot(root.e, v) == 0) {
                ok = false;
                break;
            }
        if (ok)
            return {std::move(v), std::move(coords), c};
    }
}

/// Sets in_u: all unipotent roots, and semisimple roots with <e, v> > 0.
inline void mark_in_u(std::vector<DemazureRoot>& roots, const UnipotentChoice& choice) {
    for (auto& root : roots)
        root.in_u = root.kind == RootKind::Unipotent || dot(root.e, choice.v) > 0;
}

/// ρ ≺ ρ' pairs.
struct PrecedenceRelation {
    std::set<std::pair<std::size_t, std::size_t>> pairs;

    bool precedes(std::size_t a, std::size_t b) const { return pairs.count({a, b}) != 0; }
};

inline PrecedenceRelation compute_precedence(const BilateralStructure& bilateral, const ClassTable& classes) {
    PrecedenceRelation rel;
    const auto& pos = bilateral.positive;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (classes[pos[i]] == classes[pos[j]])
                rel.pairs.insert({pos[i], pos[j]});
        for (std::size_t t : bilateral.negative)
            if (classes[t] == classes[pos[j]])
                rel.pairs.insert({t, pos[j]});
    }
    return rel;
}

} // namespace uniorb
