#include <gtest/gtest.h>

#include <random>

#include "arbor/dfs.hpp"
#include "arbor/normality.hpp"
#include "arbor/sensitive.hpp"
#include "arbor/separation.hpp"
#include "arbor/testing/corpus.hpp"
#include "arbor/testing/oracles.hpp"

using namespace arbor;

namespace {

constexpr VertexId r = 0, a = 1, b = 2;

Digraph one_way() { return Digraph(3, {{r, a}, {r, b}, {a, b}}); }
Digraph two_way() { return Digraph(3, {{r, a}, {r, b}, {a, b}, {b, a}}); }
Arborescence star() { return Arborescence(r, {{r, a}, {r, b}}); }

bool is_path_tree(const Arborescence& t) {
    for (VertexId v : t.vertices()) {
        if (t.children(v).size() > 1) return false;
    }
    return true;
}

/// v and w are incomparable along every consecutive pair of the cycle.
bool valid_certificate(const NormalAssistant& h, const CycleCertificate& c) {
    if (!is_cycle_of(h.graph(), c.vertices)) return false;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (h.base().comparable(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()])) return false;
    }
    return true;
}

std::vector<corpus::Instance> small_instances(std::size_t count, std::uint64_t seed) {
    std::vector<corpus::Instance> all;
    corpus::for_each_random_spanning(5, count, seed, [&](const corpus::Instance& i) { all.push_back(i); });
    for (auto& i : corpus::mixed(count, seed + 1)) all.push_back(i);
    return all;
}

} // namespace

TEST(TreeQuery, ChainAndStar) {
    Arborescence chain(r, {{r, a}, {a, b}});
    EXPECT_TRUE(chain.leq(a, b));
    EXPECT_EQ(chain.meet(a, b), a);
    EXPECT_EQ(star().meet(a, b), r);
    EXPECT_EQ(std::get<VertexId>(tree_query(star(), TreeQueryKind::Level, std::vector<VertexId>{a})), 1u);
    EXPECT_EQ(chain.up_closure(a), (VertexSet{a, b}));
    EXPECT_EQ(chain.down_closure(b), (std::vector<VertexId>{r, a, b}));
}

TEST(TreeQuery, CommonDownClosureIsChainToMeet) {
    std::mt19937_64 rng(corpus::kDefaultSeed);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 6;
        auto d = corpus::complete_symmetric(n);
        auto t = corpus::random_arborescence(rng, d, 0, n);
        for (VertexId v : t.vertices()) {
            for (VertexId w : t.vertices()) {
                VertexSet common;
                for (VertexId x : t.vertices()) {
                    if (oracle::ancestor(t, x, v) && oracle::ancestor(t, x, w)) common.push_back(x);
                }
                const auto dv = t.down_closure(t.meet(v, w));
                EXPECT_EQ(normalized(dv), common);
                for (std::size_t k = 0; k + 1 < dv.size(); ++k) EXPECT_EQ(t.parent(dv[k + 1]), dv[k]);
                EXPECT_EQ(dv.back(), t.meet(v, w));
            }
        }
    }
}

TEST(Arborescence, RejectsCyclesAndEdgesOutsideHost) {
    EXPECT_THROW(Arborescence(r, {{r, a}, {a, b}, {b, a}}), Error);
    Arborescence t(r, {{r, b}, {b, a}});
    try {
        t.require_within(one_way());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EdgeMissingFromHost);
    }
}

TEST(NormalAssistant, OneWayEdgeAddsOnePair) {
    auto h = normal_assistant(one_way(), star());
    EXPECT_EQ(h.added_pairs(), (std::vector<Edge>{{a, b}}));
    EXPECT_EQ(h.added()[0].witness.vertices, (std::vector<VertexId>{a, b}));
}

TEST(NormalAssistant, TwoWayEdgeAddsBothPairs) {
    auto h = normal_assistant(two_way(), star());
    EXPECT_EQ(h.added_pairs(), (std::vector<Edge>{{a, b}, {b, a}}));
}

TEST(NormalAssistant, HamiltonianPathAddsNothing) {
    auto d = corpus::complete_symmetric(5);
    Arborescence path(0, {{0, 3}, {3, 1}, {1, 4}, {4, 2}});
    EXPECT_TRUE(normal_assistant(d, path).added().empty());
}

TEST(NormalAssistant, MatchesDefinitionAndWitnessesAreTPaths) {
    for (const auto& inst : small_instances(150, corpus::kDefaultSeed)) {
        const auto h = normal_assistant(inst.d, inst.t);
        const auto expected = oracle::assistant(inst.d, inst.t);
        for (VertexId v = 0; v < inst.d.vertex_count(); ++v) {
            for (VertexId w = 0; w < inst.d.vertex_count(); ++w) {
                if (v == w || !inst.t.contains(v) || !inst.t.contains(w)) continue;
                EXPECT_EQ(h.graph().has_edge(v, w), expected[v][w] != 0) << inst.origin;
            }
        }
        for (const auto& e : h.added()) {
            const auto& p = e.witness;
            ASSERT_TRUE(p.nontrivial());
            EXPECT_TRUE(is_path_in(inst.d, p));
            EXPECT_TRUE(inst.t.leq(e.from, p.first()));
            EXPECT_TRUE(inst.t.leq(e.to, p.last()));
            for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) EXPECT_FALSE(inst.t.contains(p.vertices[i]));
        }
    }
}

TEST(IsNormal, Examples) {
    EXPECT_TRUE(is_normal(one_way(), star()).normal);
    auto v = is_normal(two_way(), star());
    ASSERT_FALSE(v.normal);
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(normalized(v.certificate->vertices), (VertexSet{a, b}));
    EXPECT_TRUE(is_normal(one_way(), Arborescence(r, {})).normal);
}

TEST(IsNormal, MatchesAcyclicityOfDefinition) {
    std::size_t count = 0;
    corpus::for_each_exhaustive(4, [&](const corpus::Instance& inst) {
        const auto v = is_normal(inst.d, inst.t);
        EXPECT_EQ(v.normal, oracle::is_normal(inst.d, inst.t));
        if (!v.normal) {
            ASSERT_TRUE(v.certificate);
            EXPECT_TRUE(valid_certificate(v.assistant, *v.certificate));
        }
        ++count;
    });
    EXPECT_GT(count, 1000u);
}

TEST(IsNormal, CompleteSymmetricOnlyPathsAreNormal) {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto d = corpus::complete_symmetric(n);
        std::size_t paths = 0;
        corpus::for_each_spanning_arborescence(d, 0, [&](const Arborescence& t) {
            EXPECT_EQ(is_normal(d, t).normal, is_path_tree(t)) << "n=" << n;
            paths += is_path_tree(t) ? 1 : 0;
        });
        std::size_t factorial = 1;
        for (std::size_t k = 2; k < n; ++k) factorial *= k;
        EXPECT_EQ(paths, factorial);
    }
}

TEST(NormalizeCycle, NormalizedCycleIsFixed) {
    auto v = is_normal(two_way(), star());
    auto again = normalize_cycle(v.assistant, v.certificate->vertices);
    EXPECT_EQ(again.vertices, v.certificate->vertices);
}

TEST(NormalizeCycle, CycleThroughTreeEdgeShortens) {
    // tree r -> p -> c, r -> q; c -> q and q -> p outside the tree
    constexpr VertexId p = 1, c = 2, q = 3;
    Digraph d(4, {{r, p}, {p, c}, {r, q}, {c, q}, {q, p}});
    Arborescence t(r, {{r, p}, {p, c}, {r, q}});
    auto h = normal_assistant(d, t);
    const std::vector<VertexId> cycle{q, p, c};
    ASSERT_TRUE(is_cycle_of(h.graph(), cycle));
    auto cert = normalize_cycle(h, cycle);
    EXPECT_TRUE(valid_certificate(h, cert));
    EXPECT_LE(cert.vertices.size(), cycle.size());
    EXPECT_EQ(normalized(cert.vertices), (VertexSet{p, q}));
}

TEST(NormalizeCycle, AnyAssistantCycleNormalizes) {
    std::size_t checked = 0;
    for (const auto& inst : small_instances(200, corpus::kDefaultSeed + 5)) {
        const auto h = normal_assistant(inst.d, inst.t);
        auto cycle = find_cycle(h.graph());
        if (!cycle) continue;
        auto cert = normalize_cycle(h, *cycle);
        EXPECT_TRUE(valid_certificate(h, cert));
        EXPECT_LE(cert.vertices.size(), cycle->size());
        ++checked;
    }
    EXPECT_GT(checked, 50u);
}

TEST(SensitiveOrder, Examples) {
    auto built = sensitive_order_build(one_way(), star());
    ASSERT_TRUE(built.order);
    EXPECT_EQ(built.order->sequence(), (std::vector<VertexId>{r, a, b}));

    Arborescence chain(r, {{r, a}, {a, b}});
    EXPECT_EQ(sensitive_order_build(one_way(), chain).order->sequence(), (std::vector<VertexId>{r, a, b}));
    EXPECT_TRUE(is_sensitive(one_way(), chain, LinearExtension({r, a, b})).sensitive);

    auto bad = sensitive_order_build(two_way(), star());
    EXPECT_FALSE(bad.normal());
    EXPECT_TRUE(bad.certificate);
}

TEST(SensitiveOrder, ReversedSiblingsViolatePathCondition) {
    auto v = is_sensitive(one_way(), star(), LinearExtension({r, b, a}));
    ASSERT_FALSE(v.sensitive);
    ASSERT_TRUE(v.violation);
    EXPECT_EQ(v.violation->condition, SensitivityCondition::Path);
    EXPECT_EQ(v.violation->v, b);
    EXPECT_EQ(v.violation->w, a);
    ASSERT_TRUE(v.violation->witness);
    EXPECT_EQ(v.violation->witness->vertices, (std::vector<VertexId>{a, b}));
}

TEST(SensitiveOrder, RejectsOrdersNotExtendingTree) {
    EXPECT_THROW(is_sensitive(one_way(), star(), LinearExtension({a, r, b})), Error);
}

TEST(SensitiveOrder, ExistsExactlyForNormalTrees) {
    for (const auto& inst : small_instances(60, corpus::kDefaultSeed + 7)) {
        if (inst.t.size() > 7) continue;
        const auto tp = oracle::t_paths(inst.d, inst.t);
        bool some = false;
        for (const auto& seq : oracle::linear_extensions(inst.t)) {
            const bool ok = oracle::is_sensitive(inst.t, tp, seq);
            EXPECT_EQ(is_sensitive(inst.d, inst.t, LinearExtension(seq)).sensitive, ok);
            some = some || ok;
        }
        const auto built = sensitive_order_build(inst.d, inst.t);
        EXPECT_EQ(built.normal(), some);
        EXPECT_EQ(is_normal(inst.d, inst.t).normal, some);
        if (built.order) EXPECT_TRUE(is_sensitive(inst.d, inst.t, *built.order).sensitive);
    }
}

TEST(Dfs, Examples) {
    const VertexId pref[] = {b, a};
    auto t = dfs_build(one_way(), r, pref);
    EXPECT_EQ(t.edges(), (std::vector<Edge>{{r, a}, {r, b}}));

    for (auto order : {std::vector<VertexId>{a, b}, std::vector<VertexId>{b, a}}) {
        auto path = dfs_build(two_way(), r, order);
        EXPECT_TRUE(is_path_tree(path));
        EXPECT_EQ(path.size(), 3u);
    }
    EXPECT_EQ(dfs_build(Digraph(1), 0).size(), 1u);
    EXPECT_FALSE(is_dfs_tree(two_way(), star()));
}

TEST(Dfs, HamiltonianPathInCompleteSymmetricIsDfsTree) {
    auto d = corpus::complete_symmetric(4);
    Arborescence path(0, {{0, 2}, {2, 3}, {3, 1}});
    EXPECT_TRUE(is_dfs_tree(d, path));
    const VertexId pref[] = {2, 3, 1};
    EXPECT_EQ(dfs_build(d, 0, pref).edges(), path.edges());
}

TEST(Dfs, NonSpanningTreeIsAnError) {
    try {
        is_dfs_tree(one_way(), Arborescence(r, {{r, a}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSpanningReachableSet);
    }
}

TEST(Dfs, TreesAreExactlyTheNormalSpanningOnes) {
    std::size_t count = 0;
    corpus::for_each_exhaustive(4, [&](const corpus::Instance& inst) {
        const auto runs = oracle::dfs_trees(inst.d, 0);
        const bool listed = runs.count(oracle::parents_of(inst.t, 4)) > 0;
        EXPECT_EQ(is_dfs_tree(inst.d, inst.t), listed);
        ++count;
    });
    corpus::for_each_random_spanning(5, 60, corpus::kDefaultSeed + 9, [&](const corpus::Instance& inst) {
        const auto runs = oracle::dfs_trees(inst.d, 0);
        EXPECT_EQ(is_normal(inst.d, inst.t).normal, runs.count(oracle::parents_of(inst.t, 5)) > 0);
        ++count;
    });
    EXPECT_GT(count, 1000u);
}

TEST(Dfs, EveryPriorityGivesNormalTree) {
    std::mt19937_64 rng(corpus::kDefaultSeed + 11);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + i % 8;
        auto d = corpus::random_digraph(rng, n, 0.35);
        std::vector<VertexId> pref(n);
        std::iota(pref.begin(), pref.end(), 0);
        std::shuffle(pref.begin(), pref.end(), rng);
        auto t = dfs_build(d, 0, pref);
        EXPECT_TRUE(is_dfs_tree(d, t));
        EXPECT_TRUE(oracle::is_normal(d, t));
    }
}

TEST(Separation, VacuousWhenNoBackPath) {
    auto res = separation_check(one_way(), star(), a, b);
    EXPECT_TRUE(res.holds);
    EXPECT_EQ(res.separator, (std::vector<VertexId>{r}));
    EXPECT_FALSE(res.counter_path);
}

TEST(Separation, BranchBelowVIsRejected) {
    // tree 0>1 0>3 1>2; the assistant has 1 -> 3, so 2's branch at the meet lies below 3
    Digraph d(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 1}});
    Arborescence t(0, {{0, 1}, {0, 3}, {1, 2}});
    ASSERT_TRUE(is_normal(d, t).normal);
    try {
        separation_check(d, t, 3, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionOrderViolated);
    }
    EXPECT_TRUE(separation_check(d, t, 2, 3).holds);
    EXPECT_THROW(separation_check(d, t, 1, 2), Error);
    EXPECT_THROW(separation_check(two_way(), star(), a, b), Error);
}

TEST(Separation, LadderRungsNeverLeadBack) {
    // a_i = 2i, b_i = 2i+1; symmetric rays, rungs a_i -> b_i, tree: a-path, a_0 -> b_0, b-path
    const std::size_t rungs = 6;
    std::vector<Edge> edges, tree{{0, 1}};
    for (VertexId i = 0; i + 1 < rungs; ++i) {
        for (VertexId s : {0u, 1u}) {
            edges.emplace_back(2 * i + s, 2 * i + 2 + s);
            edges.emplace_back(2 * i + 2 + s, 2 * i + s);
            tree.emplace_back(2 * i + s, 2 * i + 2 + s);
        }
    }
    for (VertexId i = 0; i < rungs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    Digraph d(2 * rungs, edges);
    Arborescence t(0, tree);
    ASSERT_TRUE(is_normal(d, t).normal);
    for (VertexId i = 1; i < rungs; ++i) {
        for (VertexId j = 0; j < rungs; ++j) {
            auto res = separation_check(d, t, 2 * i, 2 * j + 1);
            EXPECT_TRUE(res.holds);
            EXPECT_EQ(res.separator, (std::vector<VertexId>{0}));
        }
    }
}

TEST(Separation, HoldsOnEveryQualifyingPair) {
    std::size_t pairs = 0;
    for (const auto& inst : small_instances(200, corpus::kDefaultSeed + 13)) {
        const auto verdict = is_normal(inst.d, inst.t);
        if (!verdict.normal) continue;
        for (VertexId v : inst.t.vertices()) {
            for (VertexId w : inst.t.vertices()) {
                if (!oracle::incomparable(inst.t, v, w) || !separation_qualifies(verdict.assistant, inst.t, v, w)) {
                    continue;
                }
                const auto res = separation_check(inst.d, inst.t, v, w);
                const auto x = inst.t.down_closure(inst.t.meet(v, w));
                EXPECT_TRUE(res.holds);
                EXPECT_FALSE(oracle::path_avoiding(inst.d, w, v, x));
                ++pairs;
            }
        }
    }
    EXPECT_GT(pairs, 500u);
}

TEST(Levels, Examples) {
    Arborescence chain(r, {{r, a}, {a, b}});
    auto c = level_partition(one_way(), chain);
    EXPECT_EQ(c.levels.size(), 3u);
    EXPECT_TRUE(c.all_acyclic());

    auto s = level_partition(one_way(), star());
    ASSERT_EQ(s.levels.size(), 2u);
    EXPECT_EQ(s.levels[1], (VertexSet{a, b}));
    EXPECT_TRUE(s.all_acyclic());
    EXPECT_THROW(level_partition(two_way(), star()), Error);
}

TEST(Levels, NormalSpanningTreesHaveAcyclicLevels) {
    std::mt19937_64 rng(corpus::kDefaultSeed + 17);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + i % 7;
        auto d = corpus::random_digraph(rng, n, 0.4);
        std::vector<VertexId> pref(n);
        std::iota(pref.begin(), pref.end(), 0);
        std::shuffle(pref.begin(), pref.end(), rng);
        auto t = dfs_build(d, 0, pref);
        auto report = level_partition(d, t);
        for (const auto& level : report.levels) EXPECT_FALSE(find_cycle(d, level));
        EXPECT_TRUE(report.all_acyclic());
    }
}
