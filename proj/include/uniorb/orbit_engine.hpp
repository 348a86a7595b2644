#pragma once

// Basic subsets, their hat sets and strata, the finite-orbit verdict and the
// catalog of unipotent orbits with their torus-orbit content.

#include "uniorb/class_group.hpp"
#include "uniorb/demazure.hpp"
#include "uniorb/fan.hpp"
#include "uniorb/monoid.hpp"
#include "uniorb/radiance.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace uniorb {

struct BasicSubset {
    RaySet rays; // A
    RaySet hat;  // Â
    bool classes_independent = false;
    bool in_x_hat = false;
};

inline bool is_basic(const ClassTable& classes, const RaySet& a) {
    std::vector<IntVec> rest;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i)
                rest.push_back(classes[a[j]]);
        if (is_zero(classes[a[i]]) || solve_nonneg(classes[a[i]], rest))
            return false;
    }
    return true;
}

/// ρ' is in Â when [D_ρ'] is outside Γ(A), or shares its class with some
/// ρ in A while ρ' ≺ ρ.
inline RaySet hat_of(const ClassTable& classes, const PrecedenceRelation& precedence, const RaySet& a) {
    const ClassMonoid gamma = gamma_of_rayset(classes, a);
    RaySet hat;
    for (std::size_t r = 0; r < classes.ray_count(); ++r) {
        bool in_hat = !contains(gamma, classes[r]);
        for (std::size_t i = 0; i < a.size() && !in_hat; ++i)
            in_hat = classes[r] == classes[a[i]] && precedence.precedes(r, a[i]);
        if (in_hat)
            hat.push_back(r);
    }
    return hat;
}

/// Some maximal cone contains every ray of `hat`.
inline bool in_x_hat(const Fan& fan, const RaySet& hat) {
    for (const auto& c : fan.max_cones())
        if (is_subset(hat, c.rays))
            return true;
    return false;
}

namespace detail {

inline void basic_dfs(const ClassTable& classes, RaySet& current, std::size_t start, std::vector<RaySet>& out) {
    out.push_back(current);
    for (std::size_t r = start; r < classes.ray_count(); ++r) {
        current.push_back(r);
        // supersets of a non-basic set are never basic
        if (is_basic(classes, current))
            basic_dfs(classes, current, r + 1, out);
        current.pop_back();
    }
}

} // namespace detail

/// All basic subsets ordered by size then lexicographically, with Â and the
/// independence flag filled in. `in_x_hat` is left false; see mark_in_x_hat.
inline std::vector<BasicSubset> enumerate_basic_subsets(const ClassTable& classes,
                                                        const PrecedenceRelation& precedence) {
    std::vector<RaySet> sets;
    RaySet current;
    detail::basic_dfs(classes, current, 0, sets);
    std::sort(sets.begin(), sets.end(), [](const RaySet& a, const RaySet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<BasicSubset> out;
    out.reserve(sets.size());
    for (auto& a : sets) {
        BasicSubset b;
        b.hat = hat_of(classes, precedence, a);
        std::vector<IntVec> cls;
        for (std::size_t r : a)
            cls.push_back(classes[r]);
        b.classes_independent = q_independent(cls);
        b.rays = std::move(a);
        out.push_back(std::move(b));
    }
    return out;
}

inline void mark_in_x_hat(const Fan& fan, std::vector<BasicSubset>& subsets) {
    for (auto& b : subsets)
        b.in_x_hat = in_x_hat(fan, b.hat);
}

/// Rays of the unique minimal basic subset with the same monoid: each
/// irreducible class is represented by its ≺-least carrier.
inline RaySet minimal_basic(const ClassTable& classes, const PrecedenceRelation& precedence,
                            const ClassMonoid& gens) {
    RaySet out;
    for (const auto& irr : irreducibles(gens)) {
        RaySet carriers;
        for (std::size_t r = 0; r < classes.ray_count(); ++r)
            if (classes[r] == irr)
                carriers.push_back(r);
        for (std::size_t r : carriers) {
            bool least = std::none_of(carriers.begin(), carriers.end(),
                                      [&](std::size_t o) { return precedence.precedes(o, r); });
            if (least) {
                out.push_back(r);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Verdict {
    enum class Status { Finite, Infinite };
    enum class Reason { None, NotRadiant, NonFreeMonoid };

    Status status = Status::Infinite;
    Reason reason = Reason::NotRadiant;
    std::size_t count = 0;               // orbits, when finite
    std::optional<Cone> witness_cone;    // when NonFreeMonoid
    std::vector<IntVec> witness_irreducibles;

    bool finite() const noexcept { return status == Status::Finite; }
};

struct OrbitRecord {
    BasicSubset basic;
    std::size_t dimension = 0; // n - |Â|
    std::vector<Cone> t_orbit_cones;
};

/// Everything the pipeline derives from one fan.
struct Analysis {
    Fan fan;
    ClassGroupInfo class_group;
    std::optional<BilateralStructure> bilateral;
    std::optional<ClassTable> classes;
    std::vector<DemazureRoot> roots;
    std::optional<UnipotentChoice> unipotent;
    std::optional<PrecedenceRelation> precedence;
    std::vector<BasicSubset> basic_subsets;
    Verdict verdict;
    std::vector<OrbitRecord> orbits; // empty unless finite
};

/// Torus orbits O_σ inside the stratum of `basic`: Â ⊆ σ(1), σ(1) ∩ A = ∅.
inline std::vector<Cone> t_orbit_cones(const Fan& fan, const BasicSubset& basic) {
    std::vector<Cone> out;
    for (const auto& c : fan.cones())
        if (is_subset(basic.hat, c.rays) && disjoint(c.rays, basic.rays))
            out.push_back(c);
    return out;
}

/// Runs the whole pipeline on a complete fan. `witness` replaces the default
/// lexicographically first bilateral structure.
inline Analysis analyze(const Fan& fan, std::optional<BilateralStructure> witness = std::nullopt) {
    if (!is_complete(fan))
        throw Error(ErrorKind::NotComplete, "the cones do not cover the whole space");
    Analysis out{fan, class_group(fan), {}, {}, {}, {}, {}, {}, {}, {}};
    out.roots = enumerate_roots(fan);
    out.bilateral = witness ? std::move(witness) : find_bilateral(fan);
    if (!out.bilateral) {
        out.verdict.status = Verdict::Status::Infinite;
        out.verdict.reason = Verdict::Reason::NotRadiant;
        return out;
    }
    out.classes = radiant_classes(fan, *out.bilateral);
    out.unipotent = choose_v(fan, *out.bilateral, out.roots);
    mark_in_u(out.roots, *out.unipotent);
    out.precedence = compute_precedence(*out.bilateral, *out.classes);
    out.basic_subsets = enumerate_basic_subsets(*out.classes, *out.precedence);
    mark_in_x_hat(fan, out.basic_subsets);

    for (const auto& cone : fan.cones()) {
        ClassMonoid gamma = gamma_of_cone(*out.classes, cone);
        if (!is_free(gamma)) {
            out.verdict.status = Verdict::Status::Infinite;
            out.verdict.reason = Verdict::Reason::NonFreeMonoid;
            out.verdict.witness_cone = cone;
            out.verdict.witness_irreducibles = irreducibles(gamma);
            return out;
        }
    }

    out.verdict.status = Verdict::Status::Finite;
    out.verdict.reason = Verdict::Reason::None;
    for (const auto& b : out.basic_subsets) {
        if (!b.in_x_hat)
            continue;
        if (!b.classes_independent)
            throw Error(ErrorKind::Internal,
                        "basic subset " + to_string(b.rays) + " in the quotient domain has dependent classes");
        OrbitRecord rec;
        rec.basic = b;
        rec.dimension = fan.dim() - b.hat.size();
        rec.t_orbit_cones = t_orbit_cones(fan, b);
        out.orbits.push_back(std::move(rec));
    }
    std::stable_sort(out.orbits.begin(), out.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.dimension != b.dimension)
            return a.dimension > b.dimension;
        return a.basic.rays < b.basic.rays;
    });
    out.verdict.count = out.orbits.size();
    return out;
}

inline Verdict finiteness_verdict(const Fan& fan) {
    return analyze(fan).verdict;
}

inline std::vector<OrbitRecord> orbit_catalog(const Analysis& analysis) {
    if (!analysis.verdict.finite())
        throw Error(ErrorKind::NotFinite, "the maximal unipotent subgroup has infinitely many orbits");
    return analysis.orbits;
}

inline std::vector<OrbitRecord> orbit_catalog(const Fan& fan) {
    return orbit_catalog(analyze(fan));
}

} // namespace uniorb
