#include <gtest/gtest.h>

#include "bptk/median.hpp"
#include "support.hpp"

using namespace bptk;
using bptk::testing::Rng;

namespace {

Genome circ(std::size_t n, std::vector<std::int32_t> genes) {
    std::vector<Chromosome> c{{Chromosome::Kind::circular, std::move(genes)}};
    return Genome::from_chromosomes(n, c, Model::circular);
}

std::int64_t count_of(const MedianGraph& mg, std::int32_t a, End ea, std::int32_t b, End eb) {
    ExtremityIndex x = ea == End::head ? head_of(a) : tail_of(a);
    ExtremityIndex y = eb == End::head ? head_of(b) : tail_of(b);
    return mg.graph.weight(x, y) / 2;
}

// apply the gene renaming g -> perm[g-1] to every extremity
Genome rename(const Genome& g, const std::vector<std::int32_t>& perm) {
    std::vector<ExtremityIndex> mates(g.extremity_count());
    auto map = [&](ExtremityIndex x) {
        if (x < 0) return x;
        return 2 * (perm[static_cast<std::size_t>(x / 2)] - 1) + (x & 1);
    };
    for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(mates.size()); ++x)
        mates[static_cast<std::size_t>(map(x))] = map(g.mate(x));
    return Genome::from_mates(mates, g.model());
}

} // namespace

TEST(MedianGraph, CountsAdjacencies) {
    std::vector<Genome> gs{circ(3, {1, 2, 3}), circ(3, {1, 2, 3}), circ(3, {1, 3, 2})};
    auto mg = build_median_graph(gs, Model::general);
    EXPECT_EQ(count_of(mg, 1, End::head, 2, End::tail), 2);
    EXPECT_EQ(count_of(mg, 2, End::head, 3, End::tail), 2);
    EXPECT_EQ(count_of(mg, 3, End::head, 1, End::tail), 2);
    EXPECT_EQ(count_of(mg, 1, End::head, 3, End::tail), 1);
    EXPECT_EQ(count_of(mg, 3, End::head, 2, End::tail), 1);
    EXPECT_EQ(count_of(mg, 2, End::head, 1, End::tail), 1);
    EXPECT_EQ(mg.graph.edges().size(), 6u);

    std::vector<Genome> same{circ(3, {1, 2, 3}), circ(3, {1, 2, 3}), circ(3, {1, 2, 3})};
    auto ms = build_median_graph(same, Model::general);
    ASSERT_EQ(ms.graph.edges().size(), 3u);
    for (const auto& e : ms.graph.edges()) EXPECT_EQ(e.weight, 6);
}

TEST(MedianGraph, MixedDoubling) {
    Rng rng(1);
    std::vector<Chromosome> c{{Chromosome::Kind::linear, {1}}};
    Genome one = Genome::from_chromosomes(1, c, Model::linear);
    std::vector<Genome> gs{one, Genome::from_mates({1, 0}, Model::general)};
    auto mg = build_median_graph(gs, Model::mixed);
    EXPECT_EQ(mg.graph.vertex_count(), 4u);
    // telomere of 1t in one genome: a single unit edge x x'
    EXPECT_EQ(mg.graph.weight(0, 2), 2);
    EXPECT_EQ(mg.graph.weight(1, 3), 2);
    EXPECT_EQ(mg.graph.weight(0, 1), 2);
    EXPECT_EQ(mg.graph.weight(2, 3), 2);
}

TEST(Median, Examples) {
    std::vector<Genome> gs{circ(3, {1, 2, 3}), circ(3, {1, 2, 3}), circ(3, {1, 3, 2})};
    auto r = median(gs, Model::general);
    EXPECT_EQ(r.score, Score::whole(6));
    EXPECT_EQ(similarity(r.alpha, gs[0]), Score::whole(3));
    EXPECT_EQ(brute_force_median(gs, Model::general).score, Score::whole(6));

    Rng rng(2);
    Genome pi = bptk::testing::random_general(rng, 7);
    std::vector<Genome> same{pi, pi, pi};
    auto s = median(same, Model::general);
    EXPECT_EQ(s.alpha, pi);
    EXPECT_EQ(s.score, Score::whole(21));
}

TEST(Median, RejectsHardModels) {
    std::vector<Genome> gs{circ(3, {1, 2, 3}), circ(3, {1, 2, 3}), circ(3, {1, 3, 2})};
    for (Model m : {Model::circular, Model::linear, Model::multilinear}) {
        EXPECT_THROW(median(gs, m), HardModelError);
    }
}

TEST(Median, GeneSetMismatch) {
    std::vector<Genome> gs{circ(3, {1, 2, 3}), circ(2, {1, 2}), circ(3, {1, 3, 2})};
    EXPECT_THROW(median(gs, Model::general), GeneSetMismatch);
}

TEST(Completion, DeterministicRules) {
    Genome g = complete_matching_to_genome(Matching(4), 2, Model::general);
    EXPECT_EQ(g.mate(0), 1);
    EXPECT_EQ(g.mate(2), 3);
    Genome m = complete_matching_to_genome(Matching(2), 1, Model::mixed);
    EXPECT_TRUE(m.is_telomeric(0));
    EXPECT_TRUE(m.is_telomeric(1));
    EXPECT_TRUE(validate(m).ok());
    Matching partial(6);
    partial.add(0, 5);
    Genome p = complete_matching_to_genome(partial, 3, Model::general);
    EXPECT_EQ(p.mate(0), 5);
    EXPECT_EQ(p.mate(1), 2);
    EXPECT_EQ(p.mate(3), 4);
}

TEST(BruteForce, SmallCases) {
    std::vector<Genome> ones(4, Genome::from_mates({1, 0}, Model::general));
    EXPECT_EQ(brute_force_median(ones, Model::general).score, Score::whole(4));
    Rng rng(3);
    Genome pi = bptk::testing::random_general(rng, 3);
    std::vector<Genome> same{pi, pi, pi};
    EXPECT_EQ(brute_force_median(same, Model::general).score, Score::whole(9));
    std::vector<Genome> big(3, bptk::testing::random_general(rng, 7));
    EXPECT_THROW(brute_force_median(big, Model::general), OracleSizeError);
}

TEST(Median, ThreeGenomeOracle) {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::vector<Genome> gs;
        for (int i = 0; i < 3; ++i) gs.push_back(bptk::testing::random_general(rng, n));
        auto r = median(gs, Model::general);
        ASSERT_TRUE(validate(r.alpha, Model::general).ok());
        ASSERT_EQ(r.score, brute_force_median(gs, Model::general).score) << "trial " << trial;
    }
}

TEST(Median, ManyGenomeOracle) {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::size_t k = 4 + rng() % 2;
        std::vector<Genome> gs;
        for (std::size_t i = 0; i < k; ++i) gs.push_back(bptk::testing::random_general(rng, n));
        ASSERT_EQ(median(gs, Model::general).score, brute_force_median(gs, Model::general).score);
    }
}

TEST(Median, MixedOracle) {
    Rng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::size_t k = 2 + rng() % 4;
        std::vector<Genome> gs;
        for (std::size_t i = 0; i < k; ++i) {
            gs.push_back(rng() % 3 ? bptk::testing::random_mixed(rng, n) : bptk::testing::random_general(rng, n));
        }
        auto r = median(gs, Model::mixed);
        ASSERT_TRUE(validate(r.alpha, Model::mixed).ok());
        auto exact = brute_force_median(gs, Model::mixed);
        ASSERT_EQ(r.score, exact.score) << "trial " << trial;
        auto mg = build_median_graph(gs, Model::mixed);
        EXPECT_EQ(max_weight_matching(mg.graph).weight_in(mg.graph), 2 * exact.score.half_units());
    }
}

TEST(Median, InvariantUnderRenaming) {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 6;
        std::vector<Genome> gs, renamed;
        std::vector<std::int32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < 3; ++i) {
            gs.push_back(bptk::testing::random_mixed(rng, n));
            renamed.push_back(rename(gs.back(), perm));
        }
        EXPECT_EQ(median(gs, Model::mixed).score, median(renamed, Model::mixed).score);
        EXPECT_EQ(median(gs, Model::general).score, median(renamed, Model::general).score);
    }
}

TEST(Median, FastPathMatchesWeighted) {
    Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 5 + rng() % 30;
        std::vector<Genome> gs;
        for (int i = 0; i < 3; ++i) gs.push_back(bptk::testing::random_mixed(rng, n));
        for (Model m : {Model::general, Model::mixed}) {
            auto mg = build_median_graph(gs, m);
            Genome fast = solve_median_graph(mg, true), slow = solve_median_graph(mg, false);
            Score a, b;
            for (auto& g : gs) {
                a += similarity(fast, g);
                b += similarity(slow, g);
            }
            ASSERT_EQ(a, b);
        }
    }
}
