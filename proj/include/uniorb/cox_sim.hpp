#pragma once

// Exact rational model of total coordinate space with the G_X and root
// subgroup actions. Used as an oracle for the stratum and orbit claims.

#include "uniorb/orbit_engine.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace uniorb {

/// Point of total coordinate space, one coordinate per ray.
struct CoxPoint {
    std::vector<Rational> coords;

    RaySet zero_pattern() const {
        RaySet zeros;
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] == 0)
                zeros.push_back(r);
        return zeros;
    }

    friend bool operator==(const CoxPoint&, const CoxPoint&) = default;
};

inline Rational power(const Rational& base, BigInt exponent) {
    if (exponent < 0) {
        if (base == 0)
            throw Error(ErrorKind::InvalidInput, "negative power of zero");
        return power(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent % 2 == 1)
            result *= b;
        b *= b;
        exponent /= 2;
    }
    return result;
}

/// s ∘ x_ρ = x_ρ + s X_e with X_e = prod_{ρ' != ρ} x_ρ'^<e, n_ρ'>.
inline CoxPoint apply_root(const CoxPoint& p, const Fan& fan, const DemazureRoot& root, const Rational& s) {
    Rational monomial = 1;
    for (std::size_t r = 0; r < fan.ray_count() && monomial != 0; ++r) {
        if (r == root.distinguished_ray)
            continue;
        BigInt exponent = dot(root.e, fan.ray(r));
        if (exponent < 0)
            throw Error(ErrorKind::InvalidInput, "not a Demazure root at ray " + std::to_string(root.distinguished_ray));
        monomial *= power(p.coords[r], exponent);
    }
    CoxPoint q = p;
    q.coords[root.distinguished_ray] += s * monomial;
    return q;
}

/// g ∘ x_ρ = g([D_ρ]) x_ρ for g = (t_1, ..., t_k) in the torus G_X.
inline CoxPoint apply_torus(const CoxPoint& p, const std::vector<Rational>& t, const ClassTable& classes) {
    if (t.size() != classes.k)
        throw Error(ErrorKind::InvalidInput, "torus element has wrong rank");
    for (const auto& x : t)
        if (x == 0)
            throw Error(ErrorKind::InvalidInput, "torus coordinates must be nonzero");
    CoxPoint q = p;
    for (std::size_t r = 0; r < q.coords.size(); ++r) {
        Rational character = 1;
        for (std::size_t j = 0; j < classes.k; ++j)
            character *= power(t[j], classes[r][j]);
        q.coords[r] *= character;
    }
    return q;
}

/// The cone whose ray set is the zero pattern; nullopt when the point lies
/// in the excluded set Z.
inline std::optional<Cone> t_orbit_of(const CoxPoint& p, const Fan& fan) {
    Cone c{p.zero_pattern()};
    if (fan.is_cone(c.rays))
        return c;
    return std::nullopt;
}

/// Z_A: nonzero on A, zero on Â.
inline bool in_stratum(const CoxPoint& p, const BasicSubset& b) {
    for (std::size_t r : b.rays)
        if (p.coords[r] == 0)
            return false;
    for (std::size_t r : b.hat)
        if (p.coords[r] != 0)
            return false;
    return true;
}

/// Small-height random rationals.
class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    Rational value(bool allow_zero) {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        for (;;) {
            Rational q(num(rng_), den(rng_));
            if (allow_zero || q != 0)
                return q;
        }
    }

    /// Point with x = 0 on `zeros`, x != 0 on `nonzeros`, anything elsewhere.
    CoxPoint point(std::size_t d, const RaySet& zeros, const RaySet& nonzeros) {
        CoxPoint p;
        p.coords.resize(d);
        for (std::size_t r = 0; r < d; ++r) {
            if (std::binary_search(zeros.begin(), zeros.end(), r))
                p.coords[r] = 0;
            else
                p.coords[r] = value(!std::binary_search(nonzeros.begin(), nonzeros.end(), r));
        }
        return p;
    }

    std::vector<Rational> torus(std::size_t k) {
        std::vector<Rational> t(k);
        for (auto& x : t)
            x = value(false);
        return t;
    }

    std::size_t index(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

struct OracleReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Samples points of every stratum Z_A and checks: roots of U with
/// distinguished ray in A ⊔ Â fix the point, G_X and U preserve Z_A, and
/// the torus orbit of each sampled point of X̂ belongs to the orbit record
/// of its stratum.
inline OracleReport run_oracle(const Analysis& analysis, std::uint64_t seed, std::size_t samples_per_stratum) {
    OracleReport report;
    if (!analysis.classes)
        return report;
    const Fan& fan = analysis.fan;
    const ClassTable& classes = *analysis.classes;
    PointSampler sampler(seed);

    std::vector<const DemazureRoot*> u_roots;
    for (const auto& root : analysis.roots)
        if (root.in_u)
            u_roots.push_back(&root);

    for (const auto& b : analysis.basic_subsets) {
        RaySet fixed = b.rays;
        fixed.insert(fixed.end(), b.hat.begin(), b.hat.end());
        std::sort(fixed.begin(), fixed.end());

        const OrbitRecord* record = nullptr;
        for (const auto& rec : analysis.orbits)
            if (rec.basic.rays == b.rays)
                record = &rec;

        for (std::size_t s = 0; s < samples_per_stratum; ++s) {
            CoxPoint p = sampler.point(fan.ray_count(), b.hat, b.rays);
            const Rational shift = sampler.value(false);
            for (const DemazureRoot* root : u_roots) {
                CoxPoint q = apply_root(p, fan, *root, shift);
                ++report.checks;
                const bool trivial = std::binary_search(fixed.begin(), fixed.end(), root->distinguished_ray);
                if (trivial && !(q == p))
                    report.failures.push_back("root " + to_string(root->e) + " moves a point of Z_" +
                                              to_string(b.rays));
                if (!in_stratum(q, b))
                    report.failures.push_back("root " + to_string(root->e) + " leaves Z_" + to_string(b.rays));
            }
            ++report.checks;
            if (!in_stratum(apply_torus(p, sampler.torus(classes.k), classes), b))
                report.failures.push_back("torus leaves Z_" + to_string(b.rays));

            if (record) {
                ++report.checks;
                auto cone = t_orbit_of(p, fan);
                bool listed = cone && std::find(record->t_orbit_cones.begin(), record->t_orbit_cones.end(), *cone) !=
                                          record->t_orbit_cones.end();
                if (!listed)
                    report.failures.push_back("point of Z_" + to_string(b.rays) + " has torus orbit outside its record");
            }
        }
    }
    return report;
}

} // namespace uniorb
