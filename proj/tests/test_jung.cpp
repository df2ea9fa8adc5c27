#include <gtest/gtest.h>

#include <random>

#include "arbor/family.hpp"
#include "arbor/jung.hpp"
#include "arbor/sensitive.hpp"
#include "arbor/testing/corpus.hpp"
#include "arbor/testing/oracles.hpp"

using namespace arbor;

namespace {

constexpr VertexId r = 0, a = 1, b = 2;

bool is_path_tree(const Arborescence& t) {
    for (VertexId v : t.vertices()) {
        if (t.children(v).size() > 1) return false;
    }
    return true;
}

WellOrderedTargets targets(std::vector<VertexId> order) { return order_from_blocks({std::move(order)}); }

/// Brute force: some simple path as spine and k pairwise disjoint paths, each
/// leaving a distinct spine vertex and otherwise avoiding the spine, ending in U.
bool comb_exists(const Digraph& d, const std::function<bool(VertexId)>& in_u, std::size_t k) {
    const std::size_t n = d.vertex_count();
    bool found = false;
    for (VertexId s = 0; s < n && !found; ++s) {
        oracle::simple_paths(
            d, s, [](VertexId) { return true; },
            [&](const std::vector<VertexId>& spine) {
                if (found) return;
                std::vector<char> used(n, 0), on(n, 0), start_used(n, 0);
                for (VertexId v : spine) on[v] = 1;
                std::function<bool(std::size_t)> place = [&](std::size_t left) {
                    if (left == 0) return true;
                    for (VertexId x : spine) {
                        if (start_used[x]) continue;
                        start_used[x] = 1;
                        bool ok = false;
                        oracle::simple_paths(
                            d, x, [&](VertexId y) { return !on[y] && !used[y]; },
                            [&](const std::vector<VertexId>& p) {
                                if (ok || !in_u(p.back())) return;
                                for (std::size_t i = 1; i < p.size(); ++i) used[p[i]] = 1;
                                ok = place(left - 1);
                                for (std::size_t i = 1; i < p.size(); ++i) used[p[i]] = 0;
                            });
                        start_used[x] = 0;
                        if (ok) return true;
                    }
                    return false;
                };
                found = place(k);
            });
    }
    return found;
}

} // namespace

TEST(Jung, TwoTargetsInTwoWayStar) {
    Digraph d(3, {{r, a}, {r, b}, {a, b}, {b, a}});
    auto res = jung_build(d, r, targets({a, b}));
    EXPECT_EQ(res.tree.edges(), (std::vector<Edge>{{r, a}, {a, b}}));
    EXPECT_EQ(res.steps.at(1).start, a);
    EXPECT_TRUE(is_normal(d, res.tree).normal);
}

TEST(Jung, NoTargetsGivesRootOnly) {
    Digraph d(3, {{r, a}});
    auto res = jung_build(d, r, targets({}));
    EXPECT_EQ(res.tree.size(), 1u);
    EXPECT_EQ(res.tree.root(), r);
    auto rev = reverse_jung_build(d, r, targets({}));
    EXPECT_EQ(rev.tree.size(), 1u);
}

TEST(Jung, Errors) {
    Digraph d(3, {{r, a}});
    auto code = [&](VertexId root, std::vector<VertexId> order) {
        try {
            jung_build(d, root, targets(order));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadParameters;
    };
    EXPECT_EQ(code(7, {a}), ErrorCode::RootMissing);
    EXPECT_EQ(code(r, {9}), ErrorCode::UnknownVertex);
    EXPECT_EQ(code(r, {b}), ErrorCode::UnreachableTarget);
}

TEST(Jung, TransitiveTruncationSpansAndStarIsNormal) {
    for (std::size_t n = 1; n <= 12; ++n) {
        std::vector<Edge> edges;
        for (VertexId i = 0; i <= n; ++i)
            for (VertexId j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
        Digraph d(n + 1, edges);
        std::vector<VertexId> all(n + 1);
        std::iota(all.begin(), all.end(), 0);
        auto res = jung_build(d, 0, targets(all));
        EXPECT_EQ(res.tree.size(), n + 1);
        EXPECT_TRUE(is_normal(d, res.tree).normal);
        std::vector<Edge> star;
        for (VertexId j = 1; j <= n; ++j) star.emplace_back(0, j);
        EXPECT_TRUE(is_normal(d, Arborescence(0, star)).normal);
    }
}

TEST(Jung, ReverseBuildsInArborescence) {
    Digraph d(3, {{a, r}, {b, r}, {a, b}});
    auto res = reverse_jung_build(d, r, targets({a, b}));
    EXPECT_TRUE(res.tree.contains(a));
    EXPECT_TRUE(res.tree.contains(b));
    for (const auto& [p, c] : res.tree.edges()) EXPECT_TRUE(d.has_edge(c, p));
    EXPECT_TRUE(is_normal(reverse(d), res.tree).normal);
}

TEST(Jung, ReverseOnSymmetricMatchesForward) {
    auto d = corpus::complete_symmetric(5);
    auto fwd = jung_build(d, 0, targets({3, 1, 4}));
    auto rev = reverse_jung_build(d, 0, targets({3, 1, 4}));
    EXPECT_EQ(fwd.tree.edges(), rev.tree.edges());
}

TEST(Jung, CompleteSymmetricGivesHamiltonianPath) {
    std::mt19937_64 rng(corpus::kDefaultSeed);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<VertexId> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        auto res = jung_build(corpus::complete_symmetric(n), 0, targets(all));
        EXPECT_EQ(res.tree.size(), n);
        EXPECT_TRUE(is_path_tree(res.tree));
    }
}

TEST(Jung, StepInvariantsHold) {
    std::mt19937_64 rng(corpus::kDefaultSeed + 1);
    std::size_t steps = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + i % 7;
        auto d = corpus::random_digraph(rng, n, 0.35);
        std::vector<VertexId> reach;
        const std::array<VertexId, 1> root{0};
        const auto seen = reachable_from(d, root);
        for (VertexId v = 0; v < n; ++v)
            if (seen[v] && rng() % 2) reach.push_back(v);
        std::shuffle(reach.begin(), reach.end(), rng);

        std::vector<VertexId> so_far;
        std::map<VertexId, std::size_t> attached_at;
        std::size_t step_index = 0;
        auto res = jung_build(d, 0, targets(reach), [&](const JungStep& s, const Arborescence& t,
                                                         const LinearExtension& order) {
            so_far.push_back(s.target);
            ++step_index;
            for (VertexId v : t.vertices()) {
                if (!attached_at.count(v)) attached_at[v] = step_index;
            }
            // leaves are targets, so the targets are cofinal
            for (VertexId v : t.vertices()) {
                if (t.children(v).empty() && v != 0) {
                    EXPECT_NE(std::find(so_far.begin(), so_far.end(), v), so_far.end());
                }
            }
            // a later-attached sibling comes first in the order
            for (VertexId p : t.vertices()) {
                auto kids = t.children(p);
                for (VertexId x : kids)
                    for (VertexId y : kids)
                        if (attached_at[x] > attached_at[y]) EXPECT_LT(order.rank(x), order.rank(y));
            }
            EXPECT_TRUE(is_sensitive(d, t, order).sensitive);
            ++steps;
        });
        for (VertexId u : reach) EXPECT_TRUE(res.tree.contains(u));
        EXPECT_TRUE(oracle::is_normal(d, res.tree));
        EXPECT_EQ(res.tree.root(), 0u);
    }
    EXPECT_GT(steps, 300u);
}

TEST(Jung, BlocksConcatenateWithoutRepeats) {
    auto t = order_from_blocks({{3, 1}, {1, 2}, {4}});
    EXPECT_EQ(t.order, (std::vector<VertexId>{3, 1, 2, 4}));
    EXPECT_EQ(t.blocks.size(), 3u);
}

TEST(CombSearch, SymmetricRayHasSpineTeeth) {
    auto f = make_family("symmetric_ray");
    auto res = comb_search(*f, [](VertexId) { return true; }, 5, 20);
    ASSERT_TRUE(res.comb);
    EXPECT_EQ(res.comb->teeth.size(), 5u);
}

TEST(CombSearch, TransitiveOrderHasComb) {
    auto f = make_family("transitive_omega");
    auto res = comb_search(*f, [](VertexId) { return true; }, 3, 10);
    ASSERT_TRUE(res.comb);
    EXPECT_TRUE(is_comb_in(truncate(*f, 10).window, *res.comb, [](VertexId) { return true; }));
}

TEST(CombSearch, TooManyTeethIsExactlyAbsent) {
    Digraph d(3, {{0, 1}, {1, 2}});
    auto res = comb_search(d, [](VertexId) { return true; }, 4);
    EXPECT_FALSE(res.comb);
    EXPECT_TRUE(res.exhaustive);
}

TEST(CombSearch, AgreesWithBruteForce) {
    std::mt19937_64 rng(corpus::kDefaultSeed + 2);
    std::size_t found = 0, absent = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + i % 4;
        auto d = corpus::random_digraph(rng, n, 0.3);
        std::vector<char> u(n, 0);
        for (auto& x : u) x = rng() % 2;
        auto in_u = [&](VertexId v) { return u[v] != 0; };
        for (std::size_t k = 1; k <= 3; ++k) {
            auto res = comb_search(d, in_u, k);
            ASSERT_TRUE(res.exhaustive);
            EXPECT_EQ(res.comb.has_value(), comb_exists(d, in_u, k)) << "instance " << i << " k=" << k;
            if (res.comb) {
                EXPECT_TRUE(is_comb_in(d, *res.comb, in_u));
                EXPECT_GE(res.comb->teeth.size(), k);
                ++found;
            } else {
                ++absent;
            }
        }
    }
    EXPECT_GT(found, 50u);
    EXPECT_GT(absent, 50u);
}

TEST(CombSearch, FoundCombsPersistAtLargerDepth) {
    for (const char* name : {"symmetric_ray", "directed_ladder", "transitive_omega", "apex_necklace"}) {
        auto f = make_family(name);
        for (std::size_t k = 1; k <= 4; ++k) {
            bool seen = false;
            for (std::size_t depth = 1; depth <= 12; ++depth) {
                const bool now = comb_search(*f, [](VertexId) { return true; }, k, depth).comb.has_value();
                if (seen) EXPECT_TRUE(now) << name << " k=" << k << " depth=" << depth;
                seen = seen || now;
            }
        }
    }
}
