#pragma once

#include "uniorb/uniorb.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace uniorb::testing {

inline Fan fan2(std::vector<IntVec> rays, std::vector<std::vector<std::size_t>> cones) {
    return validate_fan(2, std::move(rays), std::move(cones), Completeness::Required);
}

// F2 written out by hand: ε1 = (1,0), ε2 = (0,1), τ1 = (-1,-2), τ2 = (0,-1).
inline Fan f2_by_hand() {
    return fan2({make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, -2}), make_vec({0, -1})},
                {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Fan hirzebruch(long long d) { return build(Hirzebruch{d}); }
inline Fan p1xp1() { return build(P1xP1{}); }
inline Fan projective(std::size_t n) { return build(Projective{n}); }

inline Fan wps(std::initializer_list<long long> weights) {
    WeightedProjective w;
    for (long long x : weights)
        w.weights.emplace_back(x);
    return build(w);
}

// Rays (1,0), (0,1), (-1,-d), (-1,0).
inline Fan negative_surface(long long d) {
    return fan2({make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, -d}), make_vec({-1, 0})},
                {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
}

// Rays ±(1,0), ±(0,1), ±(1,1).
inline Fan del_pezzo6() {
    return fan2({make_vec({1, 0}), make_vec({1, 1}), make_vec({0, 1}), make_vec({-1, 0}), make_vec({-1, -1}),
                 make_vec({0, -1})},
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

/// Complete surface fan with positive rays (1,0), (0,1) and the given
/// primitive third-quadrant vectors as negative rays, listed by increasing
/// angle from (-1,0) towards (0,-1).
inline Fan bilateral_surface(const std::vector<std::pair<long long, long long>>& negatives) {
    std::vector<IntVec> rays{make_vec({1, 0}), make_vec({0, 1})};
    for (auto [a, b] : negatives)
        rays.push_back(make_vec({a, b}));
    std::vector<std::vector<std::size_t>> cones{{0, 1}, {1, 2}};
    for (std::size_t i = 2; i + 1 < rays.size(); ++i)
        cones.push_back({i, i + 1});
    cones.push_back({rays.size() - 1, 0});
    return fan2(std::move(rays), std::move(cones));
}

struct NamedFan {
    std::string name;
    Fan fan;
};

/// Every fixture used by the property suites.
inline std::vector<NamedFan> fixture_fans() {
    std::vector<NamedFan> out;
    out.push_back({"F1", hirzebruch(1)});
    out.push_back({"F2", f2_by_hand()});
    out.push_back({"F3", hirzebruch(3)});
    out.push_back({"P2", projective(2)});
    out.push_back({"P3", projective(3)});
    out.push_back({"P1xP1", p1xp1()});
    out.push_back({"P(1,1,2)", wps({1, 1, 2})});
    out.push_back({"P(1,1,2,4)", wps({1, 1, 2, 4})});
    out.push_back({"P(1,1,2,3)", wps({1, 1, 2, 3})});
    out.push_back({"P(1,2,3)", wps({1, 2, 3})});
    out.push_back({"P(1,2,5)", wps({1, 2, 5})});
    out.push_back({"neg2", negative_surface(2)});
    out.push_back({"neg3", negative_surface(3)});
    out.push_back({"blowup3", bilateral_surface({{-1, 0}, {-1, -1}, {0, -1}})});
    out.push_back({"surface7", bilateral_surface({{-1, 0}, {-2, -1}, {-1, -1}, {-1, -2}, {0, -1}})});
    out.push_back({"surface14", bilateral_surface({{-1, 0},
                                                   {-4, -1},
                                                   {-3, -1},
                                                   {-2, -1},
                                                   {-3, -2},
                                                   {-1, -1},
                                                   {-2, -3},
                                                   {-1, -2},
                                                   {-1, -3},
                                                   {-1, -4},
                                                   {-1, -5},
                                                   {0, -1}})});
    return out;
}

/// Small fans for the sampling oracle and the precedence-root checks.
inline std::vector<NamedFan> oracle_fans() {
    return {{"F1", hirzebruch(1)},   {"F2", f2_by_hand()},         {"P2", projective(2)},
            {"P1xP1", p1xp1()},      {"P(1,1,2)", wps({1, 1, 2})}, {"P(1,1,2,4)", wps({1, 1, 2, 4})}};
}

inline std::uint64_t mask_of(const RaySet& s) {
    std::uint64_t m = 0;
    for (std::size_t r : s)
        m |= std::uint64_t{1} << r;
    return m;
}

/// Brute-force root enumeration over a box, independent of lattice_points.
inline std::vector<IntVec> brute_force_roots(const Fan& fan, std::size_t ray, long long box) {
    std::vector<IntVec> out;
    const std::size_t n = fan.dim();
    IntVec e(n);
    std::vector<long long> idx(n, -box);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            e[i] = idx[i];
        bool ok = dot(e, fan.ray(ray)) == -1;
        for (std::size_t r = 0; ok && r < fan.ray_count(); ++r)
            if (r != ray && dot(e, fan.ray(r)) < 0)
                ok = false;
        if (ok)
            out.push_back(e);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] <= box)
                break;
            idx[i] = -box;
            if (i == 0)
                return out;
        }
    }
}

} // namespace uniorb::testing
