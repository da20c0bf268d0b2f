#include "bptk/matching_median.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bptk {

MedianReduction matching_to_median(const SimpleGraph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("matching-median reduction needs a cubic graph");
    MedianReduction inst;
    inst.graph = g;
    inst.end_color.assign(g.edge_count(), {-1, -1});
    for (int x = 0; x < static_cast<int>(g.vertex_count()); ++x) {
        int color = 0;
        for (std::size_t e : g.incident(x)) inst.end_color[e][g.edges()[e].first == x ? 0 : 1] = color++;
    }

    struct ColoredEdge {
        int a, b, color;
    };
    std::vector<ColoredEdge> h_edges;
    int next = static_cast<int>(g.vertex_count());
    std::vector<int> missing;  // per H vertex: the color it lacks, -1 if none
    missing.assign(g.vertex_count(), -1);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edges()[e];
        int cx = inst.end_color[e][0], cy = inst.end_color[e][1];
        if (cx == cy) {
            h_edges.push_back({x, y, cx});
            continue;
        }
        int third = 3 - cx - cy;
        int u = next++, v = next++;
        h_edges.push_back({x, u, cx});
        h_edges.push_back({u, v, third});
        h_edges.push_back({v, y, cy});
        missing.push_back(cy);
        missing.push_back(cx);
        inst.subdivisions.push_back({e, x, u, v, y});
    }
    const int h = next;
    inst.h_vertices = static_cast<std::size_t>(h);
    const std::size_t total = 2 * static_cast<std::size_t>(h) + 4 * inst.subdivisions.size();

    std::array<std::vector<ExtremityIndex>, 3> mates;
    for (auto& m : mates) m.assign(total, kFree);
    auto link = [&](int a, int b, int color) {
        auto& m = mates[static_cast<std::size_t>(color)];
        if (m[static_cast<std::size_t>(a)] != kFree || m[static_cast<std::size_t>(b)] != kFree) {
            throw std::logic_error("color class is not a matching");
        }
        m[static_cast<std::size_t>(a)] = b;
        m[static_cast<std::size_t>(b)] = a;
    };
    for (const auto& e : h_edges) {
        link(e.a, e.b, e.color);
        link(e.a + h, e.b + h, e.color);
    }
    int aux = 2 * h;
    for (int w = static_cast<int>(g.vertex_count()); w < h; ++w) {
        int c = missing[static_cast<std::size_t>(w)];
        int a = aux++, a2 = aux++;
        link(w, a, c);
        link(w + h, a2, c);
        for (int other = 0; other < 3; ++other)
            if (other != c) link(a, a2, other);
    }
    for (int c = 0; c < 3; ++c) inst.genomes[static_cast<std::size_t>(c)] = Genome::from_mates(mates[static_cast<std::size_t>(c)], Model::general);
    return inst;
}

std::vector<std::size_t> median_to_matching(const MedianReduction& inst, const Genome& alpha) {
    if (alpha.extremity_count() != inst.extremity_count()) {
        throw GenomeError("genome has " + std::to_string(alpha.gene_count()) + " genes, instance has " +
                          std::to_string(inst.extremity_count() / 2));
    }
    const int h = static_cast<int>(inst.h_vertices);
    std::vector<std::size_t> best;
    for (int offset : {0, h}) {
        std::vector<char> subdivided(inst.graph.edge_count(), 0);
        for (const auto& s : inst.subdivisions) subdivided[s.edge] = 1;
        std::vector<std::size_t> picked;
        for (std::size_t e = 0; e < inst.graph.edge_count(); ++e) {
            if (subdivided[e]) continue;
            auto [x, y] = inst.graph.edges()[e];
            if (alpha.has_adjacency(x + offset, y + offset)) picked.push_back(e);
        }
        for (const auto& s : inst.subdivisions) {
            if (alpha.has_adjacency(s.x + offset, s.u + offset) && alpha.has_adjacency(s.v + offset, s.y + offset)) {
                picked.push_back(s.edge);
            }
        }
        std::sort(picked.begin(), picked.end());
        if (picked.size() > best.size()) best = picked;
    }
    return best;
}

SimpleGraph subdivide_edge(const SimpleGraph& g, std::size_t e) {
    auto edges = g.edges();
    auto [x, y] = edges.at(e);
    int u = static_cast<int>(g.vertex_count()), v = u + 1;
    edges[e] = {x, u};
    edges.emplace_back(u, v);
    edges.emplace_back(v, y);
    return SimpleGraph(g.vertex_count() + 2, edges);
}

} // namespace bptk
