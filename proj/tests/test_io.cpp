#include <gtest/gtest.h>

#include "bptk/io.hpp"
#include "graph_zoo.hpp"
#include "support.hpp"

using namespace bptk;
namespace zoo = bptk::testing;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_genomes(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string error_message(const std::string& text) {
    try {
        parse_genomes(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(GenomeFormat, Examples) {
    auto g1 = parse_genomes(">g1\n1 2 3 @\n");
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0].name, "g1");
    EXPECT_FALSE(g1[0].duplicated());
    EXPECT_EQ(g1[0].model(), Model::circular);
    EXPECT_EQ(g1[0].ordinary().gene_count(), 3u);
    EXPECT_TRUE(g1[0].ordinary().has_adjacency(head_of(3), tail_of(1)));

    auto g2 = parse_genomes(">g2\n1 2 $\n3 @\n");
    EXPECT_EQ(g2[0].model(), Model::mixed);
    EXPECT_EQ(decompose(g2[0].ordinary()).size(), 2u);
    EXPECT_EQ(g2[0].ordinary().telomere_count(), 2u);

    auto d = parse_genomes(">d\n1 2 1 2 @\n");
    ASSERT_TRUE(d[0].duplicated());
    EXPECT_EQ(d[0].dup().gene_count(), 2u);
    // 1^1 2^1 1^2 2^2
    const Genome& dd = d[0].dup().doubled();
    EXPECT_TRUE(dd.has_adjacency(head_of(doubled_gene(1, 1)), tail_of(doubled_gene(2, 1))));
    EXPECT_TRUE(dd.has_adjacency(head_of(doubled_gene(2, 1)), tail_of(doubled_gene(1, 2))));
    EXPECT_TRUE(dd.has_adjacency(head_of(doubled_gene(2, 2)), tail_of(doubled_gene(1, 1))));
}

TEST(GenomeFormat, InferredModels) {
    EXPECT_EQ(parse_genomes(">a\n1 @ 2 @\n")[0].model(), Model::general);
    EXPECT_EQ(parse_genomes(">a\n1 -2 $\n")[0].model(), Model::linear);
    EXPECT_EQ(parse_genomes(">a\n1 $\n2 $\n")[0].model(), Model::multilinear);
}

TEST(GenomeFormat, LayoutFreedom) {
    auto a = parse_genomes("# header comment\n>a   \n 1 2\n -3 $ 4 @ # trailing\n\n>b\n+1 2 3 4@\n");
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].name, "a");
    EXPECT_EQ(decompose(a[0].ordinary()).size(), 2u);
    EXPECT_EQ(a[1].model(), Model::circular);
}

TEST(GenomeFormat, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line(">a\n1 2 @\n3 2 @\n"), 3u);
    EXPECT_NE(error_message(">a\n1 2 @\n3 2 @\n").find("duplicate gene 2"), std::string::npos);
    EXPECT_EQ(error_line(">a\n1 2 @\n3 4\n>b\n1 @\n"), 3u);
    EXPECT_NE(error_message(">a\n1 2 @\n3 4\n").find("unterminated chromosome"), std::string::npos);
    EXPECT_EQ(error_line(">a\n1 x @\n"), 2u);
    EXPECT_NE(error_message(">a\n1 x @\n").find("unknown token 'x'"), std::string::npos);
    EXPECT_EQ(error_line("\n\n1 2 @\n"), 3u);
    EXPECT_EQ(error_line(">a\n1 3 @\n"), 1u);
    EXPECT_NE(error_message(">a\n1 3 @\n").find("missing gene 2"), std::string::npos);
    EXPECT_EQ(error_line(">a\n1 0 @\n"), 2u);
    EXPECT_EQ(error_line(">a\n1 @\n>a\n1 @\n"), 3u);
    EXPECT_EQ(error_line(">a\n1 1 1 @\n"), 2u);
    EXPECT_EQ(error_line(">a\n1 2 1 @\n"), 2u);
    EXPECT_EQ(error_line(">a\n@\n"), 2u);
    EXPECT_EQ(error_line(">a\n"), 1u);
}

TEST(GenomeFormat, ModelOverride) {
    auto g = parse_genomes(">a\n1 @\n2 @\n", Model::general);
    EXPECT_EQ(g[0].model(), Model::general);
    auto m = parse_genomes(">a\n1 2 @\n", Model::mixed);
    EXPECT_EQ(m[0].model(), Model::mixed);
    EXPECT_THROW(parse_genomes(">a\n1 $\n2 @\n", Model::circular), ParseError);
    EXPECT_THROW(parse_genomes(">a\n1 $\n", Model::general), ParseError);
}

TEST(GenomeFormat, RoundTripFuzz) {
    zoo::Rng rng(2024);
    const Model models[] = {Model::general, Model::circular, Model::linear, Model::multilinear, Model::mixed};
    std::vector<NamedGenome> corpus;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const Model m = models[rng() % 5];
        NamedGenome g;
        g.name = "g" + std::to_string(i);
        if (i % 4 == 3) g.genome = zoo::random_duplicated(rng, n, m == Model::general ? Model::circular : m);
        else g.genome = zoo::random_of_model(rng, n, m);
        corpus.push_back(std::move(g));
    }
    const std::string text = serialize_genomes(corpus);
    const auto back = parse_genomes(text);
    ASSERT_EQ(back.size(), corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        EXPECT_EQ(back[i].name, corpus[i].name);
        ASSERT_EQ(back[i].duplicated(), corpus[i].duplicated()) << i;
        if (corpus[i].duplicated()) {
            EXPECT_EQ(back[i].dup(), corpus[i].dup()) << i;
            EXPECT_EQ(back[i].dup().doubled(), corpus[i].dup().canonical().doubled()) << i;
        } else {
            EXPECT_EQ(back[i].ordinary(), corpus[i].ordinary()) << i;
        }
        EXPECT_TRUE(validate(back[i].duplicated() ? back[i].dup().doubled() : back[i].ordinary(),
                             corpus[i].model())
                        .ok());
    }
    EXPECT_EQ(serialize_genomes(back), text);
}

TEST(GraphFormat, ParseAndSerialize) {
    const auto g = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    EXPECT_TRUE(g.is_cubic());
    EXPECT_EQ(serialize_graph(g), "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    EXPECT_EQ(serialize_graph(parse_graph(serialize_graph(zoo::petersen()))), serialize_graph(zoo::petersen()));
    const auto d = parse_digraph("2 4\n1 2\n2 1\n1 2\n2 1\n");
    EXPECT_EQ(d.arcs().size(), 4u);
    EXPECT_EQ(serialize_digraph(d), "2 4\n1 2\n2 1\n1 2\n2 1\n");
}

TEST(GraphFormat, Errors) {
    auto line_of = [](const std::string& text, bool directed) -> std::size_t {
        try {
            if (directed) parse_digraph(text);
            else parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("3 2\n1 2\n2 2\n", false), 3u);
    EXPECT_EQ(line_of("3 2\n1 2\n2 1\n", false), 3u);
    EXPECT_EQ(line_of("3 2\n1 2\n", false), 2u);
    EXPECT_EQ(line_of("3 1\n1 4\n", true), 2u);
    EXPECT_EQ(line_of("3 1\n1 b\n", true), 2u);
    EXPECT_EQ(line_of("3 1\n1 2\n2 3\n", true), 3u);
    EXPECT_EQ(line_of("3 1\n1 2\n", true), 0u);
}

TEST(Newick, ParseQuartet) {
    const auto t = parse_newick("((A,B),(C,D));");
    EXPECT_EQ(t.node_count(), 7u);
    EXPECT_EQ(t.leaves().size(), 4u);
    ASSERT_TRUE(t.find("C"));
    EXPECT_EQ(serialize_newick(t), "((A,B),(C,D));");
}

TEST(Newick, LengthsLabelsAndWhitespace) {
    const auto t = parse_newick("( A:0.1 , (B:2,C)x:0.5 , D ) root ;\n");
    EXPECT_EQ(t.leaves().size(), 4u);
    EXPECT_EQ(t.name(0), "root");
    ASSERT_TRUE(t.find("x"));
    EXPECT_EQ(serialize_newick(t), "(A,(B,C)x,D)root;");
    EXPECT_EQ(serialize_newick(parse_newick(serialize_newick(t))), serialize_newick(t));
}

TEST(Newick, Errors) {
    EXPECT_THROW(parse_newick("((A,B),(C,D))"), ParseError);
    EXPECT_THROW(parse_newick("((A,B),(C,D);"), ParseError);
    EXPECT_THROW(parse_newick("((A,A),(C,D));"), ParseError);
    EXPECT_THROW(parse_newick("((A,),(C,D));"), ParseError);
    EXPECT_THROW(parse_newick("(A,B);x"), ParseError);
    EXPECT_THROW(parse_newick(""), ParseError);
}
