#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bptk/genome.hpp"
#include "bptk/matching.hpp"

namespace bptk {

// Raised for model tags whose median/halving problem is NP-hard.
class HardModelError : public std::invalid_argument {
public:
    HardModelError(const std::string& problem, Model m);
    Model model() const { return model_; }

private:
    Model model_;
};

// Occurrence count of each candidate adjacency (telomeric ones included).
struct AdjacencyCount {
    Adjacency adjacency;
    int count;
};

/*
 * General model: one vertex per extremity, edge xy of weight 2*count (half
 * units), telomeric counts ignored.
 *
 * Mixed model: vertices [0, 2n) and their copies [2n, 4n). Each non-telomeric
 * candidate appears in both copies with weight 2*count; a telomeric candidate
 * x T_x becomes the cross edge x x' of weight 2*count. The maximum matching
 * weight is exactly twice the best mixed similarity score (half units).
 */
struct MedianGraph {
    Model model = Model::general;
    std::size_t gene_count = 0;
    WeightedGraph graph;
    // per edge of graph, the candidate adjacency it stands for
    std::vector<Adjacency> provenance;
};

MedianGraph median_graph_from_counts(std::size_t gene_count, std::span<const AdjacencyCount> counts,
                                     Model model);
MedianGraph build_median_graph(std::span<const Genome> genomes, Model model);

// Counts from several genomes, sorted by adjacency.
std::vector<AdjacencyCount> count_adjacencies(std::span<const Genome> genomes);

struct MedianResult {
    Genome alpha;
    Score score;
};

// Best genome of a median graph. With force_heavy, every edge of count >= 2
// is taken up front and the unit residual goes to the cardinality matcher;
// this is exact when the counts at every extremity sum to at most 3.
Genome solve_median_graph(const MedianGraph& mg, bool force_heavy);

MedianResult median(std::span<const Genome> genomes, Model model);

// Free extremities: paired in increasing index order (general), or capped by
// telomeres (mixed).
Genome complete_matching_to_genome(const Matching& matching, std::size_t gene_count, Model model);

inline constexpr std::size_t kBruteForceMedianLimit = 6;
MedianResult brute_force_median(std::span<const Genome> genomes, Model model);

// Calls visit(mates) for every genome over n genes: all perfect matchings
// (general) or all matchings with telomere caps (mixed).
void for_each_genome(std::size_t gene_count, Model model,
                     const std::function<void(const std::vector<ExtremityIndex>&)>& visit);

} // namespace bptk
