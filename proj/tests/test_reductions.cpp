#include <gtest/gtest.h>

#include "bptk/halving.hpp"
#include "bptk/hamiltonian_halving.hpp"
#include "bptk/matching_median.hpp"
#include "bptk/median.hpp"
#include "graph_zoo.hpp"

using namespace bptk;
namespace zoo = bptk::testing;

namespace {

std::size_t decoded_size(const SimpleGraph& g) {
    auto inst = matching_to_median(g);
    std::vector<Genome> three(inst.genomes.begin(), inst.genomes.end());
    auto med = median(three, Model::general);
    auto picked = median_to_matching(inst, med.alpha);
    std::vector<char> used(g.vertex_count(), 0);
    for (std::size_t e : picked) {
        auto [u, v] = g.edges()[e];
        EXPECT_FALSE(used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    }
    return picked.size();
}

} // namespace

TEST(MatchingMedian, ColorClassesArePerfectMatchings) {
    for (const auto& g : {zoo::k4(), zoo::k33(), zoo::prism(), zoo::petersen()}) {
        auto inst = matching_to_median(g);
        for (const auto& pi : inst.genomes) EXPECT_TRUE(validate(pi).ok());
        EXPECT_EQ(inst.extremity_count(), 2 * inst.h_vertices + 4 * inst.subdivisions.size());
        EXPECT_LE(inst.extremity_count(), kMedianReductionSlope * g.edge_count());
        // auxiliary double edges have raw weight 2
        std::vector<Genome> three(inst.genomes.begin(), inst.genomes.end());
        auto mg = build_median_graph(three, Model::general);
        std::size_t heavy = 0;
        for (const auto& e : mg.graph.edges()) heavy += e.weight == 4;
        EXPECT_EQ(heavy, 2 * inst.subdivisions.size());
    }
}

TEST(MatchingMedian, DecodesMaximumMatchings) {
    EXPECT_EQ(decoded_size(zoo::k4()), 2u);
    EXPECT_EQ(decoded_size(zoo::prism()), 3u);
    EXPECT_EQ(decoded_size(zoo::k33()), 3u);
    EXPECT_EQ(decoded_size(zoo::petersen()), 5u);
    for (const auto& g : {zoo::k4(), zoo::k33(), zoo::prism(), zoo::petersen()}) {
        EXPECT_EQ(decoded_size(g), zoo::brute_force_matching_size(g));
    }
}

TEST(MatchingMedian, SubdivisionAddsOne) {
    for (const auto& g : {zoo::k4(), zoo::k33(), zoo::prism(), zoo::petersen()}) {
        auto inst = matching_to_median(g);
        const std::size_t base = zoo::brute_force_matching_size(g);
        for (const auto& s : inst.subdivisions) {
            EXPECT_EQ(zoo::brute_force_matching_size(subdivide_edge(g, s.edge)), base + 1);
        }
    }
}

TEST(MatchingMedian, RejectsNonCubic) {
    EXPECT_THROW(matching_to_median(SimpleGraph(3, {{0, 1}, {1, 2}, {2, 0}})), std::invalid_argument);
}

TEST(MatchingMedian, RejectsForeignGenome) {
    auto inst = matching_to_median(zoo::k4());
    EXPECT_THROW(median_to_matching(inst, Genome::from_mates({1, 0}, Model::general)), GenomeError);
}

TEST(HamiltonianHalving, BidirectedTriangle) {
    Digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}});
    auto red = hamiltonian_to_halving(d, HalvingVariant::circular);
    EXPECT_EQ(red.delta.doubled().gene_count(), 6u);
    EXPECT_TRUE(validate(red.delta.doubled(), Model::circular).ok());
    auto best = brute_force_halve(red.delta, Model::circular);
    EXPECT_EQ(double_similarity(best.alpha, red.delta), Score::whole(3));
    auto cycle = halving_to_hamiltonian(red, best.alpha);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_EQ(cycle->size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(d.has_arc((*cycle)[i], (*cycle)[(i + 1) % 3]));
}

TEST(HamiltonianHalving, FourVertexExample) {
    Digraph d(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
    auto red = hamiltonian_to_halving(d, HalvingVariant::circular);
    auto best = brute_force_halve(red.delta, Model::circular);
    EXPECT_EQ(double_similarity(best.alpha, red.delta), Score::whole(4));
    ASSERT_TRUE(halving_to_hamiltonian(red, best.alpha).has_value());
}

TEST(HamiltonianHalving, NoDoubleAdjacencies) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = zoo::random_two_regular_digraph(rng, 3 + static_cast<int>(rng() % 6));
        auto red = hamiltonian_to_halving(d, HalvingVariant::circular);
        for (const auto& c : halving_counts(red.delta)) EXPECT_EQ(c.count, 1);
        const Genome& g = red.delta.doubled();
        for (const auto& a : g.adjacencies()) {
            EXPECT_NE(end_of(a.x), end_of(a.y)) << "adjacencies run head to tail";
        }
    }
}

TEST(HamiltonianHalving, DecoderRejectsWeakGenomes) {
    Digraph d(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}});
    auto red = hamiltonian_to_halving(d, HalvingVariant::circular);
    // three one-gene circles share nothing with delta
    EXPECT_FALSE(halving_to_hamiltonian(red, Genome::from_mates({1, 0, 3, 2, 5, 4}, Model::general)).has_value());
}

TEST(HamiltonianHalving, RejectsBadDegrees) {
    EXPECT_THROW(hamiltonian_to_halving(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), HalvingVariant::circular),
                 std::invalid_argument);
    EXPECT_THROW(Digraph(2, {{0, 0}}), std::invalid_argument);
}

TEST(HamiltonianHalving, ExhaustiveSmallDigraphs) {
    for (bool parallel : {false, true}) {
        for (int n = 2; n <= 4; ++n) {
            auto family = zoo::all_two_regular_digraphs(n, parallel);
            if (n >= 3) {
                EXPECT_FALSE(family.empty());
            }
            for (const auto& d : family) {
                auto red = hamiltonian_to_halving(d, HalvingVariant::circular);
                auto best = brute_force_halve(red.delta, Model::circular);
                bool reaches = double_similarity(best.alpha, red.delta) >= Score::whole(n);
                ASSERT_EQ(reaches, zoo::has_hamiltonian_cycle(d)) << "n=" << n << " parallel=" << parallel;
                auto decoded = halving_to_hamiltonian(red, best.alpha);
                ASSERT_EQ(decoded.has_value(), reaches);
            }
        }
    }
}

TEST(HamiltonianHalving, LinearVariant) {
    for (int n = 3; n <= 4; ++n) {
        for (const auto& d : zoo::all_two_regular_digraphs(n, false)) {
            for (auto arc : d.arcs()) {
                auto red = hamiltonian_to_halving(d, HalvingVariant::linear, arc);
                EXPECT_TRUE(validate(red.delta.doubled(), Model::linear).ok());
                auto best = brute_force_halve(red.delta, Model::linear);
                bool reaches = double_similarity(best.alpha, red.delta) >= Score::whole(n);
                ASSERT_EQ(reaches, zoo::has_hamiltonian_path(d, arc.second, arc.first));
                auto decoded = halving_to_hamiltonian(red, best.alpha);
                ASSERT_EQ(decoded.has_value(), reaches);
                if (decoded) {
                    EXPECT_EQ(decoded->front(), arc.second);
                    EXPECT_EQ(decoded->back(), arc.first);
                }
            }
        }
    }
}
