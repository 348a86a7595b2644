#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace uniorb;
using namespace uniorb::testing;

namespace {

std::vector<std::size_t> cone_counts(const std::vector<OrbitRecord>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits)
        out.push_back(o.t_orbit_cones.size());
    return out;
}

std::set<RaySet> a_sets(const std::vector<OrbitRecord>& orbits) {
    std::set<RaySet> out;
    for (const auto& o : orbits)
        out.insert(o.basic.rays);
    return out;
}

bool spans(const Fan& f, const RaySet& outside) {
    std::vector<IntVec> rows;
    for (std::size_t r : outside)
        rows.push_back(f.ray(r));
    if (rows.empty())
        return false;
    return rank(IntMat::from_rows(rows, f.dim())) == f.dim();
}

bool all_cone_monoids_free(const Analysis& a) {
    for (const auto& c : a.fan.cones())
        if (!is_free(gamma_of_cone(*a.classes, c)))
            return false;
    return true;
}

} // namespace

TEST(BasicSubsets, Counts) {
    EXPECT_EQ(analyze(f2_by_hand()).basic_subsets.size(), 10u);
    EXPECT_EQ(analyze(wps({1, 1, 2})).basic_subsets.size(), 4u);
    EXPECT_EQ(analyze(p1xp1()).basic_subsets.size(), 9u);
}

TEST(BasicSubsets, F2ExcludesSameClassPair) {
    Analysis a = analyze(f2_by_hand());
    std::set<RaySet> sets;
    for (const auto& b : a.basic_subsets)
        sets.insert(b.rays);
    EXPECT_EQ(sets.count({0, 2}), 0u);
    EXPECT_EQ(sets.count({}), 1u);
    std::size_t pairs = std::count_if(sets.begin(), sets.end(), [](const RaySet& s) { return s.size() == 2; });
    EXPECT_EQ(pairs, 5u);
}

TEST(BasicSubsets, MatchesExhaustiveDefinition) {
    for (const auto& nf : fixture_fans()) {
        if (nf.fan.ray_count() > 10)
            continue;
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        const ClassTable& cls = *a.classes;
        std::set<RaySet> expected;
        const std::size_t d = nf.fan.ray_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            RaySet s;
            for (std::size_t r = 0; r < d; ++r)
                if (mask >> r & 1)
                    s.push_back(r);
            bool basic = true;
            for (std::size_t r : s) {
                std::vector<IntVec> others;
                for (std::size_t o : s)
                    if (o != r)
                        others.push_back(cls[o]);
                if (solve_nonneg(cls[r], others))
                    basic = false;
            }
            if (basic)
                expected.insert(s);
        }
        std::set<RaySet> got;
        for (const auto& b : a.basic_subsets) {
            got.insert(b.rays);
            EXPECT_TRUE(disjoint(b.rays, b.hat));
        }
        EXPECT_EQ(got, expected);
    }
}

TEST(InXHat, Examples) {
    Fan f = f2_by_hand();
    EXPECT_TRUE(in_x_hat(f, {2, 3}));
    EXPECT_FALSE(in_x_hat(f, {1, 3}));
    EXPECT_TRUE(in_x_hat(f, {}));
}

TEST(HatOf, F2) {
    Analysis a = analyze(f2_by_hand());
    // A = {ε1, ε2}: class (1,0) is shared with τ1 ≺ ε1, (0,1) is outside Γ(A)
    EXPECT_EQ(hat_of(*a.classes, *a.precedence, {0, 1}), (RaySet{2, 3}));
    EXPECT_EQ(hat_of(*a.classes, *a.precedence, {2, 3}), (RaySet{}));
    EXPECT_EQ(hat_of(*a.classes, *a.precedence, {}), (RaySet{0, 1, 2, 3}));
}

TEST(MinimalBasic, Examples) {
    Analysis f2 = analyze(f2_by_hand());
    EXPECT_EQ(minimal_basic(*f2.classes, *f2.precedence, gamma_of_rayset(*f2.classes, {0, 1})), (RaySet{1, 2}));
    EXPECT_EQ(minimal_basic(*f2.classes, *f2.precedence, gamma_of_rayset(*f2.classes, {0, 3})), (RaySet{2, 3}));
    Analysis p = analyze(wps({1, 1, 2}));
    EXPECT_EQ(minimal_basic(*p.classes, *p.precedence, gamma_of_rayset(*p.classes, {2})), (RaySet{2}));
}

TEST(Verdict, WeightedOneTwoThree) {
    Verdict v = finiteness_verdict(wps({1, 2, 3}));
    EXPECT_FALSE(v.finite());
    EXPECT_EQ(v.reason, Verdict::Reason::NonFreeMonoid);
    ASSERT_TRUE(v.witness_cone);
    EXPECT_EQ(v.witness_cone->rays, (RaySet{2}));
    EXPECT_EQ(v.witness_irreducibles, (std::vector<IntVec>{make_vec({2}), make_vec({3})}));
}

TEST(Verdict, WeightedOneOneTwo) {
    Verdict v = finiteness_verdict(wps({1, 1, 2}));
    EXPECT_TRUE(v.finite());
    EXPECT_EQ(v.count, 3u);
}

TEST(Verdict, NegativeSurface) {
    for (long long d : {2, 3, 4}) {
        Verdict v = finiteness_verdict(negative_surface(d));
        EXPECT_FALSE(v.finite());
        EXPECT_EQ(v.reason, Verdict::Reason::NonFreeMonoid);
        ASSERT_TRUE(v.witness_cone);
        EXPECT_EQ(v.witness_cone->rays, (RaySet{2}));
        EXPECT_EQ(v.witness_irreducibles,
                  (std::vector<IntVec>{make_vec({0, 1}), make_vec({1, 1}), make_vec({d, 0})}));
    }
}

TEST(Verdict, NotRadiant) {
    Verdict v = finiteness_verdict(del_pezzo6());
    EXPECT_FALSE(v.finite());
    EXPECT_EQ(v.reason, Verdict::Reason::NotRadiant);
}

TEST(Verdict, RequiresCompleteFan) {
    Fan half = validate_fan(2, {make_vec({1, 0}), make_vec({0, 1})}, {{0, 1}});
    try {
        analyze(half);
        FAIL() << "expected NotComplete";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotComplete);
    }
}

TEST(OrbitCatalog, WeightedOneOneTwo) {
    auto orbits = orbit_catalog(wps({1, 1, 2}));
    ASSERT_EQ(orbits.size(), 3u);
    EXPECT_EQ(cone_counts(orbits), (std::vector<std::size_t>{4, 2, 1}));
    EXPECT_EQ(orbits[0].basic.rays, (RaySet{2}));
    EXPECT_EQ(orbits[1].basic.rays, (RaySet{0}));
    EXPECT_EQ(orbits[2].basic.rays, (RaySet{1}));
    EXPECT_EQ(orbits[0].dimension, 2u);
    EXPECT_EQ(orbits[1].dimension, 1u);
    EXPECT_EQ(orbits[2].dimension, 0u);
}

TEST(OrbitCatalog, F2) {
    auto orbits = orbit_catalog(f2_by_hand());
    ASSERT_EQ(orbits.size(), 4u);
    EXPECT_EQ(cone_counts(orbits), (std::vector<std::size_t>{4, 2, 2, 1}));
}

TEST(OrbitCatalog, ProductOfLines) {
    auto orbits = orbit_catalog(p1xp1());
    EXPECT_EQ(a_sets(orbits), (std::set<RaySet>{{2, 3}, {0, 3}, {1, 2}, {0, 1}}));
}

TEST(OrbitCatalog, InfiniteRaisesNotFinite) {
    try {
        orbit_catalog(wps({1, 2, 3}));
        FAIL() << "expected NotFinite";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
    }
}

TEST(OrbitProperties, PartitionOfZeroPatterns) {
    for (const auto& nf : fixture_fans()) {
        const std::size_t d = nf.fan.ray_count();
        if (d > 14)
            continue;
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
        for (const auto& b : a.basic_subsets)
            masks.emplace_back(mask_of(b.rays), mask_of(b.hat));
        std::size_t bad = 0;
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << d); ++z) {
            std::size_t hits = 0;
            for (auto [am, hm] : masks)
                if ((am & z) == 0 && (hm & ~z) == 0)
                    ++hits;
            if (hits != 1)
                ++bad;
        }
        EXPECT_EQ(bad, 0u);
    }
}

TEST(OrbitProperties, GaleDuality) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        for (const auto& b : a.basic_subsets) {
            RaySet outside;
            for (std::size_t r = 0; r < nf.fan.ray_count(); ++r)
                if (!std::binary_search(b.rays.begin(), b.rays.end(), r))
                    outside.push_back(r);
            EXPECT_EQ(b.classes_independent, spans(nf.fan, outside)) << to_string(b.rays);
        }
    }
}

TEST(OrbitProperties, FiniteCatalogCoversEveryTorusOrbitOnce) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        EXPECT_EQ(a.verdict.finite(), a.bilateral && all_cone_monoids_free(a));
        if (!a.verdict.finite())
            continue;
        std::map<RaySet, std::size_t> seen;
        std::size_t total = 0;
        std::size_t open = 0;
        for (const auto& o : a.orbits) {
            total += o.t_orbit_cones.size();
            for (const auto& c : o.t_orbit_cones)
                ++seen[c.rays];
            if (o.dimension == nf.fan.dim()) {
                ++open;
                EXPECT_TRUE(o.basic.hat.empty());
                EXPECT_EQ(o.basic.rays, a.bilateral->negative);
            }
            EXPECT_TRUE(o.basic.classes_independent);
            EXPECT_TRUE(o.basic.in_x_hat);
        }
        EXPECT_EQ(total, nf.fan.cones().size());
        EXPECT_EQ(seen.size(), nf.fan.cones().size());
        EXPECT_EQ(open, 1u);
        EXPECT_TRUE(std::is_sorted(a.orbits.begin(), a.orbits.end(), [](const auto& x, const auto& y) {
            return x.dimension != y.dimension ? x.dimension > y.dimension : x.basic.rays < y.basic.rays;
        }));
        // every basic subset in the quotient domain has independent classes
        for (const auto& b : a.basic_subsets)
            if (b.in_x_hat) {
                EXPECT_TRUE(b.classes_independent);
            }
    }
}

TEST(OrbitProperties, VerdictIndependentOfWitness) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Verdict reference = finiteness_verdict(nf.fan);
        auto witnesses = all_bilateral(nf.fan);
        ASSERT_FALSE(witnesses.empty());
        for (const auto& w : witnesses) {
            Analysis a = analyze(nf.fan, w);
            EXPECT_EQ(a.verdict.status, reference.status);
            EXPECT_EQ(a.verdict.count, reference.count);
        }
    }
}
