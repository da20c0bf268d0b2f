#include <gtest/gtest.h>

#include "bptk/phylogeny.hpp"
#include "bptk/quartet.hpp"
#include "graph_zoo.hpp"
#include "support.hpp"

using namespace bptk;
namespace zoo = bptk::testing;

namespace {

CutColoring coloring_of(std::size_t n, std::uint64_t bits) {
    CutColoring c(n);
    for (std::size_t v = 0; v < n; ++v) c[v] = ((bits >> v) & 1) != 0;
    return c;
}

void expect_exact_accounting(const SimpleGraph& g, std::int64_t best) {
    const auto inst = maxcut_to_quartet(g);
    const std::size_t V = g.vertex_count();
    Score top;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << V); ++bits) {
        const auto chi = coloring_of(V, bits);
        const auto [a1, a2] = encode_cut(inst, chi);
        const auto c = static_cast<std::int64_t>(cut_size(g, chi));
        const Score s = quartet_score(inst, a1, a2);
        ASSERT_EQ(s, Score::whole(20 * static_cast<std::int64_t>(g.edge_count()) + c));
        const auto bd = score_breakdown(inst, a1, a2);
        for (auto x : bd.vertex_x2) EXPECT_EQ(x, 12);
        for (auto x : bd.edge_alpha1_x2) EXPECT_EQ(x, 12);
        for (auto x : bd.edge_alpha2_x2) EXPECT_EQ(x, 18);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edges()[e];
            EXPECT_EQ(bd.overlap_x2[e], chi[static_cast<std::size_t>(u)] != chi[static_cast<std::size_t>(v)] ? 4 : 2);
        }
        EXPECT_EQ(bd.other_x2, 0);
        EXPECT_EQ(decode_solution(inst, a1), chi);
        top = std::max(top, s);
    }
    EXPECT_EQ(top, Score::whole(best));
}

} // namespace

TEST(Quartet, OffsetsAndPorts) {
    const auto k4 = maxcut_to_quartet(zoo::k4());
    EXPECT_EQ(k4.offset(), 120);
    EXPECT_EQ(maxcut_to_quartet(zoo::k33()).offset(), 180);
    EXPECT_EQ(k4.gene_count(), 7 * k4.m());
    for (const auto& vg : k4.vertex_gadgets) {
        EXPECT_EQ(vg.ports.size(), 3u);
        for (const auto& p : vg.ports) {
            EXPECT_EQ(k4.classes[static_cast<std::size_t>(p.red_corner)], ExtremityClass::corner);
            EXPECT_EQ(k4.classes[static_cast<std::size_t>(p.middle)], ExtremityClass::middle);
            EXPECT_EQ(k4.classes[static_cast<std::size_t>(p.green_corner)], ExtremityClass::corner);
        }
    }
    for (const auto& p : k4.pi) EXPECT_TRUE(validate(p, Model::general).ok());
}

TEST(Quartet, RejectsNonCubicAndDisconnected) {
    EXPECT_THROW(maxcut_to_quartet(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), std::invalid_argument);
    std::vector<std::pair<int, int>> two_k4;
    for (auto [u, v] : zoo::k4().edges()) {
        two_k4.emplace_back(u, v);
        two_k4.emplace_back(u + 4, v + 4);
    }
    EXPECT_THROW(maxcut_to_quartet(SimpleGraph(8, two_k4)), std::invalid_argument);
}

TEST(Quartet, EncodeExamples) {
    const auto k4 = maxcut_to_quartet(zoo::k4());
    auto [a1, a2] = encode_cut(k4, {false, false, true, true});
    EXPECT_EQ(quartet_score(k4, a1, a2), Score::whole(124));
    auto [m1, m2] = encode_cut(k4, {false, false, false, false});
    EXPECT_EQ(quartet_score(k4, m1, m2), Score::whole(120));
    const auto k33 = maxcut_to_quartet(zoo::k33());
    CutColoring proper(6);
    for (int v = 0; v < 6; ++v) proper[static_cast<std::size_t>(v)] = (zoo::k33().incident(v).size(), v >= 3);
    auto [b1, b2] = encode_cut(k33, proper);
    EXPECT_EQ(quartet_score(k33, b1, b2), Score::whole(189));
}

TEST(Quartet, AccountingIdentitiesK4) { expect_exact_accounting(zoo::k4(), 124); }

TEST(Quartet, AccountingIdentitiesK33) { expect_exact_accounting(zoo::k33(), 189); }

TEST(Quartet, AccountingIdentitiesPrism) { expect_exact_accounting(zoo::prism(), 20 * 9 + 7); }

TEST(Quartet, DecodeFirstGenomeIsAllRed) {
    const auto inst = maxcut_to_quartet(zoo::k4());
    EXPECT_EQ(decode_solution(inst, inst.pi[0]), CutColoring(4, false));
    EXPECT_EQ(decode_solution(inst, inst.pi[1]), CutColoring(4, true));
}

TEST(Quartet, VerifyReportK4) {
    const auto report = verify_instance(maxcut_to_quartet(zoo::k4()));
    ASSERT_TRUE(report.ok) << report.failure;
    EXPECT_TRUE(report.exhaustive);
    EXPECT_EQ(report.colorings, 16u);
    EXPECT_EQ(report.summary(), "all identities hold; offset 120; maxcut 4; optimum encode score 124");
    ASSERT_EQ(report.vertex_table.size(), 4u);
    for (auto [lo, hi] : report.overlap_table) {
        EXPECT_EQ(lo, Score::whole(1));
        EXPECT_EQ(hi, Score::whole(2));
    }
    for (auto [lo, hi] : report.edge_alpha2_table) EXPECT_EQ(lo, hi);
}

TEST(Quartet, VerifyReportK33AndSampledPetersen) {
    EXPECT_EQ(verify_instance(maxcut_to_quartet(zoo::k33())).summary(),
              "all identities hold; offset 180; maxcut 9; optimum encode score 189");
    const auto pet = verify_instance(maxcut_to_quartet(zoo::petersen()));
    ASSERT_TRUE(pet.ok) << pet.failure;
    EXPECT_FALSE(pet.exhaustive);
    EXPECT_EQ(pet.colorings, 1000u);
    EXPECT_LE(pet.max_cut, 12u);
}

TEST(Quartet, MutatedRungIsFlagged) {
    const auto g = zoo::k4();
    const auto inst = maxcut_to_quartet(g);
    const auto& eg = inst.edge_gadgets[2];
    // swap the two rungs for la lc, lb ld in pi2
    std::vector<ExtremityIndex> m(inst.pi[1].mates().begin(), inst.pi[1].mates().end());
    m[static_cast<std::size_t>(eg.la)] = eg.lc;
    m[static_cast<std::size_t>(eg.lc)] = eg.la;
    m[static_cast<std::size_t>(eg.lb)] = eg.ld;
    m[static_cast<std::size_t>(eg.ld)] = eg.lb;
    auto pi = inst.pi;
    pi[1] = Genome::from_mates(m, Model::general);
    const auto report = verify_instance(quartet_with_genomes(g, pi));
    EXPECT_FALSE(report.ok);
    EXPECT_NE(report.failure.find("edge gadget 2"), std::string::npos) << report.failure;
    EXPECT_NE(report.failure.find("alpha1-side contribution 4, expected 6"), std::string::npos) << report.failure;
}

TEST(Quartet, NormalizeKeepsNormalInput) {
    const auto inst = maxcut_to_quartet(zoo::k4());
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        const auto [a1, a2] = encode_cut(inst, coloring_of(4, bits));
        const auto res = normalize(inst, a1, a2);
        EXPECT_EQ(res.after, res.before);
        EXPECT_EQ(res.alpha1, a1);
        EXPECT_EQ(res.alpha2, a2);
    }
}

TEST(Quartet, NormalizeRandomPairs) {
    zoo::Rng rng(31);
    for (const auto& g : {zoo::k4(), zoo::k33()}) {
        const auto inst = maxcut_to_quartet(g);
        const std::size_t n = inst.gene_count();
        for (int t = 0; t < 100; ++t) {
            Genome a1 = t % 3 == 2 ? zoo::random_mixed(rng, n) : zoo::random_general(rng, n);
            Genome a2 = t % 3 == 1 ? zoo::random_mixed(rng, n) : zoo::random_general(rng, n);
            const auto res = normalize(inst, a1, a2);
            EXPECT_TRUE(supported_by(res.alpha1, inst.pi[0], inst.pi[1]));
            EXPECT_TRUE(supported_by(res.alpha2, inst.pi[2], inst.pi[3]));
            EXPECT_GE(res.after, quartet_score(inst, a1, a2));
            EXPECT_EQ(res.after, quartet_score(inst, res.alpha1, res.alpha2));
        }
    }
}

TEST(Quartet, NormalizePerturbedEncoding) {
    zoo::Rng rng(5);
    for (const auto& g : {zoo::k4(), zoo::k33(), zoo::prism()}) {
        const auto inst = maxcut_to_quartet(g);
        const std::size_t N = inst.classes.size();
        for (int t = 0; t < 30; ++t) {
            CutColoring chi(g.vertex_count());
            for (std::size_t v = 0; v < chi.size(); ++v) chi[v] = (rng() & 1) != 0;
            auto [a1, a2] = encode_cut(inst, chi);
            // one random 2-break in alpha1
            std::vector<ExtremityIndex> m(a1.mates().begin(), a1.mates().end());
            const auto x = static_cast<ExtremityIndex>(rng() % N);
            auto z = static_cast<ExtremityIndex>(rng() % N);
            while (z == x || z == m[static_cast<std::size_t>(x)]) z = static_cast<ExtremityIndex>(rng() % N);
            const ExtremityIndex y = m[static_cast<std::size_t>(x)], w = m[static_cast<std::size_t>(z)];
            m[static_cast<std::size_t>(x)] = z;
            m[static_cast<std::size_t>(z)] = x;
            m[static_cast<std::size_t>(y)] = w;
            m[static_cast<std::size_t>(w)] = y;
            const Genome p1 = Genome::from_mates(m, Model::general);
            const Score perturbed = quartet_score(inst, p1, a2);
            const auto res = normalize(inst, p1, a2);
            EXPECT_GE(res.after, perturbed);
            EXPECT_TRUE(supported_by(res.alpha1, inst.pi[0], inst.pi[1]));
            EXPECT_TRUE(supported_by(res.alpha2, inst.pi[2], inst.pi[3]));
        }
    }
}

TEST(Quartet, SteinerizationFromEncodingNeverDecreases) {
    const auto inst = maxcut_to_quartet(zoo::k33());
    const PhyloTree tree(6, {{0, 4}, {1, 4}, {4, 5}, {5, 2}, {5, 3}});
    auto [a1, a2] = encode_cut(inst, CutColoring(6, false));
    Assignment start{inst.pi[0], inst.pi[1], inst.pi[2], inst.pi[3], a1, a2};
    const auto res = steinerize_from(tree, start, Model::general, 1000);
    EXPECT_GE(res.score, quartet_score(inst, a1, a2));
    for (std::size_t i = 1; i < res.history.size(); ++i) EXPECT_GT(res.history[i], res.history[i - 1]);
    EXPECT_LE(res.score, Score::whole(189));
}

TEST(Quartet, AlternativeTopologiesStayBelowOffset) {
    for (const auto& g : {zoo::k4(), zoo::k33(), zoo::prism()}) {
        const auto inst = maxcut_to_quartet(g);
        const auto scores = compare_topologies(inst);
        ASSERT_EQ(scores.size(), 3u);
        EXPECT_EQ(scores[0].topology, "((pi1,pi2),(pi3,pi4))");
        EXPECT_GE(scores[0].score, Score::whole(inst.offset()));
        // a heuristic value can only sit below the optimum, so it must respect the bound too
        for (std::size_t i = 1; i < 3; ++i) EXPECT_LE(scores[i].score, Score::whole(inst.offset())) << scores[i].topology;
    }
}
