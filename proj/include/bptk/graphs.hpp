#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bptk {

// Undirected simple graph, vertices 0..V-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    // Throws std::invalid_argument on self-loops, repeated edges or bad ids.
    SimpleGraph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges);

    std::size_t vertex_count() const { return incident_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // incident edge indices, ascending
    const std::vector<std::size_t>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
    int other(std::size_t edge, int v) const {
        return edges_[edge].first == v ? edges_[edge].second : edges_[edge].first;
    }
    bool is_cubic() const;
    bool is_connected() const;

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

// Directed multigraph without self-loops, vertices 0..V-1.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t vertex_count, std::vector<std::pair<int, int>> arcs);

    std::size_t vertex_count() const { return out_.size(); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    // outgoing arc indices in input order
    const std::vector<std::size_t>& out_arcs(int v) const { return out_[static_cast<std::size_t>(v)]; }
    std::size_t in_degree(int v) const { return in_degree_[static_cast<std::size_t>(v)]; }
    std::size_t out_degree(int v) const { return out_[static_cast<std::size_t>(v)].size(); }
    bool has_arc(int u, int v) const;
    // weakly connected
    bool is_connected() const;

private:
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> in_degree_;
};

// Red/green vertex coloring; true = green.
using CutColoring = std::vector<bool>;

std::size_t cut_size(const SimpleGraph& g, const CutColoring& coloring);

// Exhaustive maximum cut, vertex_count <= 24. Vertex 0 stays red.
std::pair<std::size_t, CutColoring> max_cut_exhaustive(const SimpleGraph& g);

} // namespace bptk
