#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bptk {

using Vertex = std::int32_t;
inline constexpr Vertex kUnmatched = -1;

struct WeightedEdge {
    Vertex u;
    Vertex v;
    // half units; always positive once stored
    std::int64_t weight;
};

// Undirected graph with non-negative integer edge weights. Parallel edges are
// merged by summing weights; zero-weight edges are dropped. Edges are kept
// in (u, v) lexicographic order with u < v.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t vertex_count, std::span<const WeightedEdge> edges);

    std::size_t vertex_count() const { return n_; }
    std::span<const WeightedEdge> edges() const { return edges_; }
    std::int64_t weight(Vertex u, Vertex v) const;
    std::int64_t max_weight() const;

    // neighbours of every vertex, ascending, as indices into edges()
    std::vector<std::vector<std::size_t>> incidence() const;

private:
    std::size_t n_ = 0;
    std::vector<WeightedEdge> edges_;
};

class Matching {
public:
    Matching() = default;
    explicit Matching(std::size_t vertex_count) : mate_(vertex_count, kUnmatched) {}

    std::size_t vertex_count() const { return mate_.size(); }
    Vertex mate(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }
    bool is_matched(Vertex v) const { return mate(v) != kUnmatched; }
    void add(Vertex u, Vertex v);

    std::size_t size() const;
    // pairs (u, v) with u < v, ascending
    std::vector<std::pair<Vertex, Vertex>> pairs() const;
    // total weight of the pairs in g; throws if a pair is not an edge of g
    std::int64_t weight_in(const WeightedGraph& g) const;

private:
    std::vector<Vertex> mate_;
};

// Maximum-cardinality matching of the underlying simple graph (weights are
// ignored). Edmonds' blossom algorithm with union-find blossom bases and a
// greedy start; a failed search retires its alternating tree. O(V * E * alpha).
Matching max_cardinality_matching(const WeightedGraph& g);

// Maximum-weight (not necessarily perfect) matching. Primal-dual blossom
// algorithm in integer arithmetic, O(V^3).
Matching max_weight_matching(const WeightedGraph& g);

// Exhaustive search over all matchings; vertex_count <= 16.
inline constexpr std::size_t kBruteForceMatchingLimit = 16;
Matching brute_force_max_weight(const WeightedGraph& g);

// Simple augmenting-path (Kuhn) matcher for bipartite graphs; side[v] in {0,1}.
Matching bipartite_max_cardinality(const WeightedGraph& g, const std::vector<int>& side);

class OracleSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace bptk
