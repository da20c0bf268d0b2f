#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "bptk/matching.hpp"

using namespace bptk;

namespace {

WeightedGraph unit_graph(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<WeightedEdge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v, 1});
    return WeightedGraph(n, edges);
}

WeightedGraph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return unit_graph(10, e);
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, int max_w) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> w(1, max_w);
    std::vector<WeightedEdge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (keep(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w(rng)});
    return WeightedGraph(n, edges);
}

void expect_valid(const Matching& m, const WeightedGraph& g) {
    for (Vertex v = 0; v < static_cast<Vertex>(m.vertex_count()); ++v) {
        if (m.is_matched(v)) {
            EXPECT_EQ(m.mate(m.mate(v)), v);
            EXPECT_GT(g.weight(v, m.mate(v)), 0);
        }
    }
}

} // namespace

TEST(WeightedGraph, MergesParallelEdgesAndDropsZero) {
    std::vector<WeightedEdge> e{{1, 0, 2}, {0, 1, 3}, {1, 2, 0}};
    WeightedGraph g(3, e);
    ASSERT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.weight(0, 1), 5);
    EXPECT_EQ(g.weight(1, 2), 0);
}

TEST(WeightedGraph, RejectsSelfLoop) {
    std::vector<WeightedEdge> e{{1, 1, 2}};
    EXPECT_THROW(WeightedGraph(3, e), std::invalid_argument);
}

TEST(Cardinality, SmallKnownGraphs) {
    EXPECT_EQ(max_cardinality_matching(unit_graph(3, {{0, 1}, {1, 2}, {0, 2}})).size(), 1u);
    EXPECT_EQ(max_cardinality_matching(petersen()).size(), 5u);
    EXPECT_EQ(max_cardinality_matching(WeightedGraph(4, {})).size(), 0u);
    EXPECT_EQ(max_cardinality_matching(unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).size(), 2u);
}

TEST(Cardinality, BlossomNeeded) {
    // odd cycle 0..4 with pendant 5 on 0 and pendant 6 on 2
    auto g = unit_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {2, 6}});
    EXPECT_EQ(max_cardinality_matching(g).size(), 3u);
}

TEST(Weighted, SmallKnownGraphs) {
    std::vector<WeightedEdge> one{{0, 1, 4}};
    EXPECT_EQ(max_weight_matching(WeightedGraph(2, one)).weight_in(WeightedGraph(2, one)), 4);
    std::vector<WeightedEdge> path{{0, 1, 2}, {1, 2, 2}};
    WeightedGraph p(3, path);
    EXPECT_EQ(max_weight_matching(p).weight_in(p), 2);
    // heavier middle edge beats two light ones
    std::vector<WeightedEdge> p4{{0, 1, 2}, {1, 2, 5}, {2, 3, 2}};
    WeightedGraph g4(4, p4);
    EXPECT_EQ(max_weight_matching(g4).weight_in(g4), 5);
}

TEST(BruteForce, KnownValuesAndBound) {
    auto k4 = unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(brute_force_max_weight(k4).size(), 2u);
    EXPECT_EQ(brute_force_max_weight(unit_graph(3, {{0, 1}, {1, 2}, {0, 2}})).size(), 1u);
    EXPECT_EQ(brute_force_max_weight(petersen()).size(), 5u);
    EXPECT_THROW(brute_force_max_weight(WeightedGraph(17, {})), OracleSizeError);
}

TEST(Oracle, RandomGraphsAgree) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> dens(0.1, 0.9);
    for (int trial = 0; trial < 400; ++trial) {
        auto g = random_graph(rng, size(rng), dens(rng), 3);
        auto exact = brute_force_max_weight(g);
        auto w = max_weight_matching(g);
        expect_valid(w, g);
        ASSERT_EQ(w.weight_in(g), exact.weight_in(g)) << "trial " << trial;

        auto unit = unit_graph(g.vertex_count(), {});
        std::vector<WeightedEdge> ue;
        for (auto e : g.edges()) ue.push_back({e.u, e.v, 1});
        WeightedGraph ug(g.vertex_count(), ue);
        auto c = max_cardinality_matching(ug);
        expect_valid(c, ug);
        ASSERT_EQ(c.size(), brute_force_max_weight(ug).size()) << "trial " << trial;
    }
}

TEST(Oracle, LargerWeightedAgainstBruteForce) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 16, 0.5, 20);
        ASSERT_EQ(max_weight_matching(g).weight_in(g), brute_force_max_weight(g).weight_in(g));
    }
}

TEST(Bipartite, AgreesWithGeneralMatcher) {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution keep(0.3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t left = 1 + rng() % 15, right = 1 + rng() % 15;
        std::vector<WeightedEdge> e;
        for (std::size_t u = 0; u < left; ++u)
            for (std::size_t v = 0; v < right; ++v)
                if (keep(rng)) e.push_back({static_cast<Vertex>(u), static_cast<Vertex>(left + v), 1});
        WeightedGraph g(left + right, e);
        std::vector<int> side(left + right, 1);
        std::fill(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(left), 0);
        ASSERT_EQ(max_cardinality_matching(g).size(), bipartite_max_cardinality(g, side).size());
    }
}

TEST(Cardinality, LargeSparseIsFast) {
    std::mt19937_64 rng(11);
    const std::size_t n = 200000;
    std::vector<WeightedEdge> e;
    for (std::size_t i = 0; i < 3 * n / 2; ++i) {
        Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
        if (u != v) e.push_back({u, v, 1});
    }
    WeightedGraph g(n, e);
    auto m = max_cardinality_matching(g);
    expect_valid(m, g);
    EXPECT_GT(m.size(), n / 3);
}
