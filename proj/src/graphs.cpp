#include "bptk/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "bptk/matching.hpp"

namespace bptk {

namespace {

bool connected(std::size_t n, const std::vector<std::pair<int, int>>& links) {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : links) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

void check_ids(std::size_t n, int u, int v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= n) {
        throw std::invalid_argument("vertex id out of range in (" + std::to_string(u + 1) + "," +
                                    std::to_string(v + 1) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
}

} // namespace

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<int, int>> edges)
    : edges_(std::move(edges)), incident_(vertex_count) {
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        auto [u, v] = edges_[k];
        check_ids(vertex_count, u, v);
        if (!seen.insert(std::minmax(u, v)).second) {
            throw std::invalid_argument("repeated edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
        }
        incident_[static_cast<std::size_t>(u)].push_back(k);
        incident_[static_cast<std::size_t>(v)].push_back(k);
    }
}

bool SimpleGraph::is_cubic() const {
    return std::all_of(incident_.begin(), incident_.end(), [](const auto& inc) { return inc.size() == 3; });
}

bool SimpleGraph::is_connected() const { return connected(vertex_count(), edges_); }

Digraph::Digraph(std::size_t vertex_count, std::vector<std::pair<int, int>> arcs)
    : arcs_(std::move(arcs)), out_(vertex_count), in_degree_(vertex_count, 0) {
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        auto [u, v] = arcs_[k];
        check_ids(vertex_count, u, v);
        out_[static_cast<std::size_t>(u)].push_back(k);
        ++in_degree_[static_cast<std::size_t>(v)];
    }
}

bool Digraph::has_arc(int u, int v) const {
    for (std::size_t k : out_arcs(u))
        if (arcs_[k].second == v) return true;
    return false;
}

bool Digraph::is_connected() const { return connected(vertex_count(), arcs_); }

std::size_t cut_size(const SimpleGraph& g, const CutColoring& coloring) {
    std::size_t c = 0;
    for (auto [u, v] : g.edges()) c += coloring[static_cast<std::size_t>(u)] != coloring[static_cast<std::size_t>(v)];
    return c;
}

std::pair<std::size_t, CutColoring> max_cut_exhaustive(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 24) throw OracleSizeError("exhaustive max cut is limited to 24 vertices");
    std::pair<std::size_t, CutColoring> best{0, CutColoring(n, false)};
    const std::uint64_t half = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < half; ++mask) {
        CutColoring c(n);
        for (std::size_t v = 1; v < n; ++v) c[v] = (mask >> (v - 1)) & 1;
        std::size_t s = cut_size(g, c);
        if (s > best.first) best = {s, c};
    }
    return best;
}

} // namespace bptk
