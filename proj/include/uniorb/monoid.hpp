#pragma once

#include "uniorb/class_group.hpp"

#include <map>
#include <vector>

namespace uniorb {

/// Submonoid of Z_{>=0}^k generated by ray classes. Equal class vectors are
/// kept once; `origins[i]` lists the rays carrying `generators[i]`.
struct ClassMonoid {
    std::size_t ambient_rank = 0;
    std::vector<IntVec> generators; // distinct, lexicographic
    std::vector<RaySet> origins;
};

inline ClassMonoid gamma_of_rayset(const ClassTable& classes, const RaySet& rays) {
    std::map<IntVec, RaySet> grouped;
    for (std::size_t r : rays)
        grouped[classes[r]].push_back(r);
    ClassMonoid m;
    m.ambient_rank = classes.k;
    for (auto& [cls, origin] : grouped) {
        if (is_zero(cls))
            throw Error(ErrorKind::DegenerateGenerator, "ray " + std::to_string(origin.front()) + " has zero class");
        std::sort(origin.begin(), origin.end());
        m.generators.push_back(cls);
        m.origins.push_back(std::move(origin));
    }
    return m;
}

/// Γ(σ): generated by the classes of rays outside σ.
inline ClassMonoid gamma_of_cone(const ClassTable& classes, const Cone& cone) {
    RaySet outside;
    for (std::size_t r = 0; r < classes.ray_count(); ++r)
        if (!cone.contains(r))
            outside.push_back(r);
    return gamma_of_rayset(classes, outside);
}

inline bool contains(const ClassMonoid& m, const IntVec& c) {
    if (is_zero(c))
        return true;
    return solve_nonneg(c, m.generators).has_value();
}

/// Generators with no representation as a sum of two or more generators.
inline std::vector<IntVec> irreducibles(const ClassMonoid& m) {
    std::vector<IntVec> out;
    // Generators are distinct and nonzero, so any such representation of g
    // avoids g itself and uses at least one other generator.
    for (std::size_t i = 0; i < m.generators.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < m.generators.size(); ++j)
            if (j != i)
                others.push_back(m.generators[j]);
        if (!solve_nonneg(m.generators[i], others))
            out.push_back(m.generators[i]);
    }
    return out;
}

/// Free iff the irreducible elements are linearly independent over Q.
inline bool is_free(const ClassMonoid& m) {
    return q_independent(irreducibles(m));
}

} // namespace uniorb
