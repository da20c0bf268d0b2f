#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bptk/genome.hpp"
#include "bptk/graphs.hpp"
#include "bptk/phylogeny.hpp"

namespace bptk {

// Malformed input; line is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/*
 * Genome files:
 *
 *   # comment
 *   >name
 *   1 -2 3 @      circular chromosome
 *   4 5 $         linear chromosome
 *
 * A chromosome may span lines and a line may hold several chromosomes. Every
 * gene 1..n appears once (ordinary genome) or every gene appears exactly
 * twice (duplicated genome; first occurrence is copy 1).
 */
struct NamedGenome {
    std::string name;
    std::variant<Genome, DuplicatedGenome> genome;
    // line of the '>' header
    std::size_t line = 0;

    bool duplicated() const { return std::holds_alternative<DuplicatedGenome>(genome); }
    const Genome& ordinary() const { return std::get<Genome>(genome); }
    const DuplicatedGenome& dup() const { return std::get<DuplicatedGenome>(genome); }
    Model model() const;
};

// single circular -> circular, all circular -> general, single linear ->
// linear, all linear -> multilinear, otherwise mixed
Model infer_model(const std::vector<Chromosome>& chromosomes);

// With model_override every genome is retagged and must satisfy the model.
std::vector<NamedGenome> parse_genomes(std::string_view text, std::optional<Model> model_override = std::nullopt);

// Chromosome lines of a genome, canonical order, no header.
std::string format_chromosomes(const Genome& g);
std::string format_chromosomes(const DuplicatedGenome& g);
std::string serialize_genome(const NamedGenome& g);
std::string serialize_genomes(const std::vector<NamedGenome>& genomes);

const NamedGenome& find_genome(const std::vector<NamedGenome>& genomes, const std::string& name);

/*
 * Graph files: first line "V E", then E lines "u v" with 1-based vertices.
 * Digraphs use the same layout with ordered pairs.
 */
SimpleGraph parse_graph(std::string_view text);
Digraph parse_digraph(std::string_view text);
std::string serialize_graph(const SimpleGraph& g);
std::string serialize_digraph(const Digraph& d);

// Newick trees; branch lengths are ignored, leaf names must be unique and
// non-empty. Node 0 is the outermost group.
PhyloTree parse_newick(std::string_view text);
std::string serialize_newick(const PhyloTree& tree, NodeId root = 0);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bptk
