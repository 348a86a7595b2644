#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace uniorb;
using namespace uniorb::testing;

namespace {

std::size_t count_kind(const std::vector<DemazureRoot>& roots, RootKind kind) {
    return std::count_if(roots.begin(), roots.end(), [&](const auto& r) { return r.kind == kind; });
}

const DemazureRoot* find_root(const std::vector<DemazureRoot>& roots, const IntVec& e, std::size_t ray) {
    for (const auto& r : roots)
        if (r.e == e && r.distinguished_ray == ray)
            return &r;
    return nullptr;
}

IntVec dual_row(const BilateralStructure& b, std::size_t i) { return b.dual_basis.row(i); }

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

} // namespace

TEST(EnumerateRoots, ProjectivePlane) {
    auto roots = enumerate_roots(projective(2));
    EXPECT_EQ(roots.size(), 6u);
    EXPECT_EQ(count_kind(roots, RootKind::Semisimple), 6u);
    for (std::size_t r = 0; r < 3; ++r)
        EXPECT_EQ(std::count_if(roots.begin(), roots.end(), [&](const auto& x) { return x.distinguished_ray == r; }), 2);
}

TEST(EnumerateRoots, F2) {
    auto roots = enumerate_roots(f2_by_hand());
    ASSERT_EQ(roots.size(), 5u);
    EXPECT_EQ(count_kind(roots, RootKind::Semisimple), 2u);
    EXPECT_EQ(count_kind(roots, RootKind::Unipotent), 3u);
    std::vector<std::pair<IntVec, std::size_t>> expected{{make_vec({-1, 0}), 0},
                                                         {make_vec({0, -1}), 1},
                                                         {make_vec({1, -1}), 1},
                                                         {make_vec({2, -1}), 1},
                                                         {make_vec({1, 0}), 2}};
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(roots[i].e, expected[i].first);
        EXPECT_EQ(roots[i].distinguished_ray, expected[i].second);
    }
    EXPECT_EQ(roots[0].kind, RootKind::Semisimple);
    EXPECT_EQ(roots[4].kind, RootKind::Semisimple);
}

TEST(EnumerateRoots, ProductOfLines) {
    auto roots = enumerate_roots(p1xp1());
    EXPECT_EQ(roots.size(), 4u);
    EXPECT_EQ(count_kind(roots, RootKind::Semisimple), 4u);
}

TEST(EnumerateRoots, MatchesBoxBruteForce) {
    for (const auto& nf : fixture_fans()) {
        if (nf.fan.dim() > 3)
            continue;
        SCOPED_TRACE(nf.name);
        auto roots = enumerate_roots(nf.fan);
        for (std::size_t r = 0; r < nf.fan.ray_count(); ++r) {
            std::vector<IntVec> mine;
            for (const auto& root : roots)
                if (root.distinguished_ray == r)
                    mine.push_back(root.e);
            auto small = brute_force_roots(nf.fan, r, 7);
            // a larger box finds nothing new, so the box is large enough
            EXPECT_EQ(small, brute_force_roots(nf.fan, r, 11));
            EXPECT_EQ(mine, small);
        }
    }
}

TEST(EnumerateRoots, Invariants) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        std::set<IntVec> all;
        for (const auto& r : a.roots)
            all.insert(r.e);
        EXPECT_TRUE(std::is_sorted(a.roots.begin(), a.roots.end(), [](const auto& x, const auto& y) {
            return std::tie(x.distinguished_ray, x.e) < std::tie(y.distinguished_ray, y.e);
        }));
        for (const auto& r : a.roots) {
            EXPECT_EQ(dot(r.e, nf.fan.ray(r.distinguished_ray)), -1);
            for (std::size_t o = 0; o < nf.fan.ray_count(); ++o)
                if (o != r.distinguished_ray) {
                    EXPECT_GE(dot(r.e, nf.fan.ray(o)), 0);
                }
            EXPECT_EQ(r.kind == RootKind::Semisimple, all.count(negated(r.e)) == 1);
            if (r.kind == RootKind::Unipotent) {
                EXPECT_TRUE(r.in_u);
            }
            else
                EXPECT_EQ(r.in_u, dot(r.e, a.unipotent->v) > 0);
        }
    }
}

TEST(ChooseV, Examples) {
    for (const Fan& f : {f2_by_hand(), projective(2), p1xp1()}) {
        Analysis a = analyze(f);
        ASSERT_TRUE(a.unipotent);
        EXPECT_EQ(a.unipotent->v, make_vec({-1, -2}));
        EXPECT_EQ(a.unipotent->c, 2);
    }
}

TEST(ChooseV, ChainAndNonvanishing) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        const IntVec& v = a.unipotent->v;
        BigInt previous = 0;
        for (std::size_t i = 0; i < nf.fan.dim(); ++i) {
            BigInt x = dot(dual_row(*a.bilateral, i), v);
            EXPECT_LT(x, previous);
            previous = x;
        }
        for (const auto& r : a.roots)
            if (r.kind == RootKind::Semisimple) {
                EXPECT_NE(dot(r.e, v), 0);
            }
    }
}

TEST(Precedence, Examples) {
    using P = std::set<std::pair<std::size_t, std::size_t>>;
    EXPECT_EQ(analyze(f2_by_hand()).precedence->pairs, (P{{2, 0}}));
    EXPECT_EQ(analyze(wps({1, 1, 2})).precedence->pairs, (P{{2, 0}}));
    EXPECT_EQ(analyze(p1xp1()).precedence->pairs, (P{{2, 0}, {3, 1}}));
    EXPECT_EQ(analyze(projective(2)).precedence->pairs, (P{{0, 1}, {2, 0}, {2, 1}}));
}

TEST(Precedence, StrictPartialOrderOnEqualClasses) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        const auto& rel = *a.precedence;
        for (auto [x, y] : rel.pairs) {
            EXPECT_NE(x, y);
            EXPECT_EQ((*a.classes)[x], (*a.classes)[y]);
            EXPECT_FALSE(rel.precedes(y, x));
            for (auto [y2, z] : rel.pairs)
                if (y2 == y) {
                    EXPECT_TRUE(rel.precedes(x, z));
                }
        }
    }
}

// ρ ≺ ρ' exactly when one in-U root at ρ' pairs to 1 with ρ and to 0 with the
// remaining rays, and there is only one such root.
TEST(Precedence, RootCharacterization) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        const Fan& f = nf.fan;
        for (std::size_t x = 0; x < f.ray_count(); ++x)
            for (std::size_t y = 0; y < f.ray_count(); ++y) {
                if (x == y)
                    continue;
                std::size_t witnesses = 0;
                for (const auto& r : a.roots) {
                    if (r.distinguished_ray != y || !r.in_u || dot(r.e, f.ray(x)) != 1)
                        continue;
                    bool rest_zero = true;
                    for (std::size_t o = 0; o < f.ray_count(); ++o)
                        if (o != x && o != y && dot(r.e, f.ray(o)) != 0)
                            rest_zero = false;
                    if (rest_zero)
                        ++witnesses;
                }
                EXPECT_LE(witnesses, 1u);
                EXPECT_EQ(a.precedence->precedes(x, y), witnesses == 1) << x << " vs " << y;
            }
    }
}

TEST(Precedence, PositivePairsAndNegativePositivePairs) {
    for (const auto& nf : fixture_fans()) {
        SCOPED_TRACE(nf.name);
        Analysis a = analyze(nf.fan);
        const Fan& f = nf.fan;
        const auto& b = *a.bilateral;
        auto zero_on_negatives_except = [&](const IntVec& e, std::optional<std::size_t> skip) {
            for (std::size_t t : b.negative)
                if ((!skip || t != *skip) && dot(e, f.ray(t)) != 0)
                    return false;
            return true;
        };
        for (std::size_t j = 0; j < f.dim(); ++j) {
            const std::size_t eps_j = b.positive[j];
            for (std::size_t i = 0; i < f.dim(); ++i) {
                if (i == j)
                    continue;
                IntVec e = sub(dual_row(b, i), dual_row(b, j));
                const DemazureRoot* root = find_root(a.roots, e, eps_j);
                bool holds = root && root->in_u && zero_on_negatives_except(e, std::nullopt);
                EXPECT_EQ(a.precedence->precedes(b.positive[i], eps_j), holds);
            }
            for (std::size_t t : b.negative) {
                IntVec e = negated(dual_row(b, j));
                const DemazureRoot* root = find_root(a.roots, e, eps_j);
                bool holds = root && root->in_u && dot(e, f.ray(t)) == 1 && zero_on_negatives_except(e, t);
                EXPECT_EQ(a.precedence->precedes(t, eps_j), holds);
            }
        }
    }
}
