#include "bptk/median.hpp"

#include <algorithm>
#include <stdexcept>

namespace bptk {

HardModelError::HardModelError(const std::string& problem, Model m)
    : std::invalid_argument(problem + " is NP-hard in the " + to_string(m) +
                            " model; only general and mixed are supported"),
      model_(m) {}

namespace {

void require_solvable(const std::string& problem, Model m) {
    if (m != Model::general && m != Model::mixed) throw HardModelError(problem, m);
}

void require_common_genes(std::span<const Genome> genomes) {
    if (genomes.empty()) throw std::invalid_argument("no input genomes");
    for (const auto& g : genomes) {
        if (g.gene_count() != genomes[0].gene_count()) {
            throw GeneSetMismatch(genomes[0].gene_count(), g.gene_count());
        }
        auto report = validate(g);
        if (!report.ok()) throw GenomeError("invalid input genome: " + report.violations.front());
    }
}

// Mixed-model decoding of a matching in the doubled graph: take the copy
// whose own edges plus half the cross edges weigh more (copy 1 on ties).
std::vector<ExtremityIndex> decode_doubled(const MedianGraph& mg, const Matching& m) {
    const auto two_n = static_cast<Vertex>(2 * mg.gene_count);
    std::int64_t value[2] = {0, 0};
    for (auto [u, v] : m.pairs()) {
        std::int64_t w = mg.graph.weight(u, v);
        bool cross = (u < two_n) != (v < two_n);
        if (cross) continue;
        value[u < two_n ? 0 : 1] += w;
    }
    const Vertex offset = value[1] > value[0] ? two_n : 0;
    std::vector<ExtremityIndex> mates(static_cast<std::size_t>(two_n), kFree);
    for (Vertex x = 0; x < two_n; ++x) {
        Vertex partner = m.mate(x + offset);
        if (partner == kUnmatched) continue;
        bool cross = (partner < two_n) != (x + offset < two_n);
        mates[static_cast<std::size_t>(x)] = cross ? kTelomere : partner - offset;
    }
    return mates;
}

Genome complete_mates(std::vector<ExtremityIndex> mates, Model model) {
    if (model == Model::mixed) {
        for (auto& m : mates)
            if (m == kFree) m = kTelomere;
    } else {
        ExtremityIndex pending = kFree;
        for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(mates.size()); ++x) {
            if (mates[static_cast<std::size_t>(x)] != kFree) continue;
            if (pending == kFree) {
                pending = x;
            } else {
                mates[static_cast<std::size_t>(x)] = pending;
                mates[static_cast<std::size_t>(pending)] = x;
                pending = kFree;
            }
        }
    }
    return Genome::from_mates(std::move(mates), model);
}

std::int64_t total_similarity_x2(const Genome& alpha, std::span<const Genome> genomes) {
    std::int64_t x2 = 0;
    for (const auto& g : genomes) x2 += similarity(alpha, g).half_units();
    return x2;
}

} // namespace

std::vector<AdjacencyCount> count_adjacencies(std::span<const Genome> genomes) {
    std::vector<Adjacency> all;
    for (const auto& g : genomes) {
        auto adj = g.adjacencies();
        all.insert(all.end(), adj.begin(), adj.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<AdjacencyCount> counts;
    for (const auto& a : all) {
        if (!counts.empty() && counts.back().adjacency == a) {
            ++counts.back().count;
        } else {
            counts.push_back({a, 1});
        }
    }
    return counts;
}

MedianGraph median_graph_from_counts(std::size_t gene_count, std::span<const AdjacencyCount> counts,
                                     Model model) {
    require_solvable("the breakpoint median", model);
    MedianGraph mg;
    mg.model = model;
    mg.gene_count = gene_count;
    const auto two_n = static_cast<Vertex>(2 * gene_count);
    std::vector<WeightedEdge> edges;
    std::vector<std::pair<std::pair<Vertex, Vertex>, Adjacency>> origin;
    auto add = [&](Vertex u, Vertex v, std::int64_t w, Adjacency a) {
        edges.push_back({u, v, w});
        origin.push_back({{std::min(u, v), std::max(u, v)}, a});
    };
    for (const auto& [a, count] : counts) {
        if (count <= 0) continue;
        if (a.x < 0 || a.x >= two_n || a.y >= two_n) throw GenomeError("candidate adjacency out of range");
        if (a.telomeric()) {
            if (model == Model::mixed) add(a.x, a.x + two_n, 2 * count, a);
        } else {
            add(a.x, a.y, 2 * count, a);
            if (model == Model::mixed) add(a.x + two_n, a.y + two_n, 2 * count, a);
        }
    }
    mg.graph = WeightedGraph(static_cast<std::size_t>(model == Model::mixed ? 2 * two_n : two_n), edges);
    std::sort(origin.begin(), origin.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    mg.provenance.reserve(mg.graph.edges().size());
    std::size_t at = 0;
    for (const auto& e : mg.graph.edges()) {
        while (origin[at].first != std::pair(e.u, e.v)) ++at;
        mg.provenance.push_back(origin[at].second);
    }
    return mg;
}

MedianGraph build_median_graph(std::span<const Genome> genomes, Model model) {
    require_solvable("the breakpoint median", model);
    if (genomes.size() < 2) throw std::invalid_argument("a median needs at least two genomes");
    require_common_genes(genomes);
    auto counts = count_adjacencies(genomes);
    return median_graph_from_counts(genomes[0].gene_count(), counts, model);
}

Genome solve_median_graph(const MedianGraph& mg, bool force_heavy) {
    const std::size_t nv = mg.graph.vertex_count();
    Matching m(nv);
    if (!force_heavy) {
        m = max_weight_matching(mg.graph);
    } else {
        for (const auto& e : mg.graph.edges()) {
            if (e.weight < 4) continue;
            if (m.is_matched(e.u) || m.is_matched(e.v)) {
                throw std::logic_error("edges of count >= 2 do not form a matching");
            }
            m.add(e.u, e.v);
        }
        std::vector<WeightedEdge> residual;
        for (const auto& e : mg.graph.edges()) {
            if (e.weight < 4 && !m.is_matched(e.u) && !m.is_matched(e.v)) residual.push_back({e.u, e.v, 1});
        }
        Matching rest = max_cardinality_matching(WeightedGraph(nv, residual));
        for (auto [u, v] : rest.pairs()) m.add(u, v);
    }
    const std::int64_t weight = m.weight_in(mg.graph);

    Genome alpha;
    if (mg.model == Model::mixed) {
        alpha = complete_mates(decode_doubled(mg, m), Model::mixed);
    } else {
        std::vector<ExtremityIndex> mates(nv, kFree);
        for (auto [u, v] : m.pairs()) {
            mates[static_cast<std::size_t>(u)] = v;
            mates[static_cast<std::size_t>(v)] = u;
        }
        alpha = complete_mates(std::move(mates), Model::general);
    }

    // recount the decoded genome against the graph
    std::int64_t value = 0;
    for (std::size_t k = 0; k < mg.graph.edges().size(); ++k) {
        const Adjacency& a = mg.provenance[k];
        const auto& e = mg.graph.edges()[k];
        if (mg.model == Model::mixed && e.u >= static_cast<Vertex>(2 * mg.gene_count)) continue;
        if (a.telomeric() ? alpha.is_telomeric(a.x) : alpha.has_adjacency(a.x, a.y)) {
            value += a.telomeric() ? e.weight / 2 : e.weight;
        }
    }
    if ((mg.model == Model::mixed ? 2 * value : value) != weight) {
        throw std::logic_error("decoded genome does not attain the matching weight");
    }
    return alpha;
}

MedianResult median(std::span<const Genome> genomes, Model model) {
    MedianGraph mg = build_median_graph(genomes, model);
    Genome alpha = solve_median_graph(mg, genomes.size() == 3);
    return {alpha, Score::from_half_units(total_similarity_x2(alpha, genomes))};
}

Genome complete_matching_to_genome(const Matching& matching, std::size_t gene_count, Model model) {
    require_solvable("genome completion", model);
    if (matching.vertex_count() != 2 * gene_count) {
        throw std::invalid_argument("matching is not over the extremity universe");
    }
    std::vector<ExtremityIndex> mates(2 * gene_count, kFree);
    for (auto [u, v] : matching.pairs()) {
        mates[static_cast<std::size_t>(u)] = v;
        mates[static_cast<std::size_t>(v)] = u;
    }
    return complete_mates(std::move(mates), model);
}

void for_each_genome(std::size_t gene_count, Model model,
                     const std::function<void(const std::vector<ExtremityIndex>&)>& visit) {
    const auto size = static_cast<ExtremityIndex>(2 * gene_count);
    std::vector<ExtremityIndex> mates(static_cast<std::size_t>(size), kFree);
    const bool telomeres = model == Model::mixed || model == Model::linear || model == Model::multilinear;
    std::function<void(ExtremityIndex)> rec = [&](ExtremityIndex from) {
        ExtremityIndex x = from;
        while (x < size && mates[static_cast<std::size_t>(x)] != kFree) ++x;
        if (x == size) {
            visit(mates);
            return;
        }
        if (telomeres) {
            mates[static_cast<std::size_t>(x)] = kTelomere;
            rec(x + 1);
        }
        for (ExtremityIndex y = x + 1; y < size; ++y) {
            if (mates[static_cast<std::size_t>(y)] != kFree) continue;
            mates[static_cast<std::size_t>(x)] = y;
            mates[static_cast<std::size_t>(y)] = x;
            rec(x + 1);
            mates[static_cast<std::size_t>(y)] = kFree;
        }
        mates[static_cast<std::size_t>(x)] = kFree;
    };
    rec(0);
}

MedianResult brute_force_median(std::span<const Genome> genomes, Model model) {
    require_solvable("the breakpoint median", model);
    require_common_genes(genomes);
    const std::size_t n = genomes[0].gene_count();
    if (n > kBruteForceMedianLimit) {
        throw OracleSizeError("brute-force median is limited to n <= " + std::to_string(kBruteForceMedianLimit) +
                              ", got n = " + std::to_string(n));
    }
    MedianResult best{Genome(), Score::from_half_units(-1)};
    for_each_genome(n, model, [&](const std::vector<ExtremityIndex>& mates) {
        Genome alpha = Genome::from_mates(mates, model);
        Score s = Score::from_half_units(total_similarity_x2(alpha, genomes));
        if (s > best.score) best = {alpha, s};
    });
    return best;
}

} // namespace bptk
