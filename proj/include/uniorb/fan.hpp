#pragma once

#include "uniorb/exact_linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace uniorb {

using RaySet = std::vector<std::size_t>; // sorted ray indices

inline bool is_subset(const RaySet& small, const RaySet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline RaySet set_intersection(const RaySet& a, const RaySet& b) {
    RaySet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool disjoint(const RaySet& a, const RaySet& b) {
    return set_intersection(a, b).empty();
}

inline std::string to_string(const RaySet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

/// A simplicial cone, stored only by the indices of its rays.
struct Cone {
    RaySet rays;

    std::size_t size() const noexcept { return rays.size(); }
    bool contains(std::size_t ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

    friend bool operator==(const Cone&, const Cone&) = default;
    // size first, then lexicographic
    friend bool operator<(const Cone& a, const Cone& b) {
        if (a.rays.size() != b.rays.size())
            return a.rays.size() < b.rays.size();
        return a.rays < b.rays;
    }
};

enum class Completeness { NotRequired, Required };

class Fan;
Fan validate_fan(std::size_t dim, std::vector<IntVec> rays, std::vector<std::vector<std::size_t>> max_cones,
                 Completeness completeness = Completeness::NotRequired);

/// Validated simplicial fan. Immutable once built.
class Fan {
  public:
    std::size_t dim() const noexcept { return dim_; }
    std::size_t ray_count() const noexcept { return rays_.size(); }
    const std::vector<IntVec>& rays() const noexcept { return rays_; }
    const IntVec& ray(std::size_t i) const { return rays_.at(i); }
    const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
    /// Every face including the zero cone, ordered by size then lexicographically.
    const std::vector<Cone>& cones() const noexcept { return all_cones_; }

    bool is_cone(const RaySet& s) const {
        return std::binary_search(all_cones_.begin(), all_cones_.end(), Cone{s});
    }

  private:
    friend Fan validate_fan(std::size_t, std::vector<IntVec>, std::vector<std::vector<std::size_t>>, Completeness);

    std::size_t dim_ = 0;
    std::vector<IntVec> rays_;
    std::vector<Cone> max_cones_;
    std::vector<Cone> all_cones_;
};

bool is_complete(const Fan& fan);

namespace detail {

// Do cone(a) and cone(b) meet outside cone(a ∩ b)?  Decided by exact
// feasibility of  sum λ_i u_i - sum μ_j w_j = 0, λ, μ >= 0, and unit mass on
// the rays outside the common set.
inline bool cones_overlap(const std::vector<IntVec>& rays, std::size_t dim, const RaySet& a, const RaySet& b) {
    const RaySet common = set_intersection(a, b);
    const std::size_t nvars = a.size() + b.size();
    fm::RationalSystem sys;
    sys.dim = nvars;
    for (std::size_t c = 0; c < dim; ++c) {
        fm::Row r;
        r.coef.assign(nvars, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r.coef[i] = rays[a[i]][c];
        for (std::size_t j = 0; j < b.size(); ++j)
            r.coef[a.size() + j] = -Rational(rays[b[j]][c]);
        r.bound = 0;
        sys.equalities.push_back(std::move(r));
    }
    fm::Row mass;
    mass.coef.assign(nvars, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!std::binary_search(common.begin(), common.end(), a[i]))
            mass.coef[i] = 1;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!std::binary_search(common.begin(), common.end(), b[j]))
            mass.coef[a.size() + j] = 1;
    mass.bound = 1;
    sys.equalities.push_back(std::move(mass));
    for (std::size_t v = 0; v < nvars; ++v) {
        fm::Row r;
        r.coef.assign(nvars, 0);
        r.coef[v] = 1;
        r.bound = 0;
        sys.inequalities.push_back(std::move(r));
    }
    return fm::feasible(sys);
}

} // namespace detail

inline Fan validate_fan(std::size_t dim, std::vector<IntVec> rays, std::vector<std::vector<std::size_t>> max_cones,
                        Completeness completeness) {
    if (dim == 0)
        throw Error(ErrorKind::InvalidInput, "fan dimension must be positive");
    if (rays.empty())
        throw Error(ErrorKind::InvalidInput, "fan has no rays");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != dim)
            throw Error(ErrorKind::InvalidInput,
                        "ray " + std::to_string(i) + " has length " + std::to_string(rays[i].size()) +
                            ", expected " + std::to_string(dim));
        if (gcd_of(rays[i]) != 1)
            throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " " + to_string(rays[i]));
    }
    {
        std::map<IntVec, std::size_t> seen;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            auto [it, inserted] = seen.emplace(rays[i], i);
            if (!inserted)
                throw Error(ErrorKind::DuplicateRay, "rays " + std::to_string(it->second) + " and " +
                                                         std::to_string(i) + " are both " + to_string(rays[i]));
        }
    }
    if (max_cones.empty())
        throw Error(ErrorKind::InvalidInput, "fan has no cones");

    std::vector<RaySet> cones;
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        RaySet s = max_cones[c];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " repeats a ray index");
        for (std::size_t r : s)
            if (r >= rays.size())
                throw Error(ErrorKind::InvalidInput,
                            "cone " + std::to_string(c) + " references missing ray " + std::to_string(r));
        if (s.empty())
            throw Error(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " is empty");
        cones.push_back(std::move(s));
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    // faces listed alongside their cones are not maximal
    std::vector<RaySet> maximal;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < cones.size() && !contained; ++j)
            contained = i != j && cones[i].size() < cones[j].size() && is_subset(cones[i], cones[j]);
        if (!contained)
            maximal.push_back(cones[i]);
    }

    std::vector<bool> used(rays.size(), false);
    for (const auto& s : maximal)
        for (std::size_t r : s)
            used[r] = true;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (!used[i])
            throw Error(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " belongs to no cone");

    for (const auto& s : maximal) {
        std::vector<IntVec> gens;
        for (std::size_t r : s)
            gens.push_back(rays[r]);
        if (!q_independent(gens))
            throw Error(ErrorKind::NonSimplicialCone, "cone " + to_string(s));
    }

    // faces of simplicial cones meet properly once the maximal cones do
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (detail::cones_overlap(rays, dim, maximal[i], maximal[j]))
                throw Error(ErrorKind::FanConditionViolated,
                            "cones " + to_string(maximal[i]) + " and " + to_string(maximal[j]) +
                                " do not meet in a common face");

    std::set<RaySet> faces;
    for (const auto& s : maximal) {
        const std::size_t m = s.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            RaySet face;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t{1} << b))
                    face.push_back(s[b]);
            faces.insert(std::move(face));
        }
    }

    Fan fan;
    fan.dim_ = dim;
    fan.rays_ = std::move(rays);
    for (auto& s : maximal)
        fan.max_cones_.push_back(Cone{std::move(s)});
    std::sort(fan.max_cones_.begin(), fan.max_cones_.end());
    for (const auto& f : faces)
        fan.all_cones_.push_back(Cone{f});
    std::sort(fan.all_cones_.begin(), fan.all_cones_.end());

    if (completeness == Completeness::Required && !is_complete(fan))
        throw Error(ErrorKind::NotComplete, "the cones do not cover the whole space");
    return fan;
}

/// Ridge-pairing criterion: every maximal cone is full-dimensional, every
/// ridge lies in exactly two maximal cones, and ridge adjacency is connected.
inline bool is_complete(const Fan& fan) {
    const std::size_t n = fan.dim();
    if (n == 1) {
        return fan.ray_count() == 2 && fan.max_cones().size() == 2 &&
               fan.ray(0)[0] == -fan.ray(1)[0];
    }
    const auto& maxc = fan.max_cones();
    for (const auto& c : maxc)
        if (c.size() != n)
            return false;

    std::map<RaySet, std::vector<std::size_t>> ridges;
    for (std::size_t c = 0; c < maxc.size(); ++c)
        for (std::size_t drop = 0; drop < n; ++drop) {
            RaySet ridge;
            for (std::size_t k = 0; k < n; ++k)
                if (k != drop)
                    ridge.push_back(maxc[c].rays[k]);
            ridges[ridge].push_back(c);
        }
    for (const auto& [ridge, owners] : ridges)
        if (owners.size() != 2)
            return false;

    std::vector<bool> seen(maxc.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    std::vector<std::vector<std::size_t>> adjacent(maxc.size());
    for (const auto& [ridge, owners] : ridges) {
        adjacent[owners[0]].push_back(owners[1]);
        adjacent[owners[1]].push_back(owners[0]);
    }
    while (!todo.empty()) {
        std::size_t c = todo.front();
        todo.pop();
        for (std::size_t d : adjacent[c])
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                todo.push(d);
            }
    }
    return reached == maxc.size();
}

/// All cones whose ray set contains `s`, by size then lexicographically.
inline std::vector<Cone> cones_with_rayset(const Fan& fan, RaySet s) {
    std::sort(s.begin(), s.end());
    std::vector<Cone> out;
    for (const auto& c : fan.cones())
        if (is_subset(s, c.rays))
            out.push_back(c);
    return out;
}

} // namespace uniorb
