#include "bptk/hamiltonian_halving.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bptk {

std::vector<int> euler_walk(const Digraph& d, int start, std::optional<std::size_t> skip) {
    std::vector<std::size_t> cursor(d.vertex_count(), 0);
    std::vector<int> stack{start}, walk;
    while (!stack.empty()) {
        int v = stack.back();
        const auto& out = d.out_arcs(v);
        auto& at = cursor[static_cast<std::size_t>(v)];
        while (at < out.size() && skip && out[at] == *skip) ++at;
        if (at < out.size()) {
            stack.push_back(d.arcs()[out[at++]].second);
        } else {
            walk.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

HalvingReduction hamiltonian_to_halving(const Digraph& d, HalvingVariant variant,
                                        std::optional<std::pair<int, int>> removed_arc) {
    const int n = static_cast<int>(d.vertex_count());
    if (n == 0) throw std::invalid_argument("empty digraph");
    for (int v = 0; v < n; ++v) {
        if (d.in_degree(v) != 2 || d.out_degree(v) != 2) {
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " does not have in- and out-degree 2");
        }
    }
    if (!d.is_connected()) throw std::invalid_argument("digraph is not connected");

    HalvingReduction red;
    red.graph = d;
    red.variant = variant;
    std::vector<int> walk;
    if (variant == HalvingVariant::circular) {
        walk = euler_walk(d, 0);
        walk.pop_back();
    } else {
        auto arc = removed_arc.value_or(d.arcs().front());
        std::optional<std::size_t> skip;
        for (std::size_t k : d.out_arcs(arc.first))
            if (d.arcs()[k].second == arc.second) {
                skip = k;
                break;
            }
        if (!skip) {
            throw std::invalid_argument("arc (" + std::to_string(arc.first + 1) + "," + std::to_string(arc.second + 1) +
                                        ") is not in the digraph");
        }
        red.removed_arc = arc;
        walk = euler_walk(d, arc.second, skip);
    }
    if (walk.size() != 2 * static_cast<std::size_t>(n)) throw std::logic_error("Euler walk misses arcs");
    red.walk = walk;

    std::vector<int> visits(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> genes;
    for (int v : walk) genes.push_back(doubled_gene(v + 1, ++visits[static_cast<std::size_t>(v)]));
    std::vector<Chromosome> chromosome{
        {variant == HalvingVariant::circular ? Chromosome::Kind::circular : Chromosome::Kind::linear, genes}};
    Model model = variant == HalvingVariant::circular ? Model::circular : Model::linear;
    red.delta = DuplicatedGenome(Genome::from_chromosomes(2 * static_cast<std::size_t>(n), chromosome, model));
    return red;
}

std::optional<std::vector<int>> halving_to_hamiltonian(const HalvingReduction& red, const Genome& alpha) {
    const auto n = red.graph.vertex_count();
    if (alpha.gene_count() != n) throw GeneSetMismatch(n, alpha.gene_count());
    if (double_similarity(alpha, red.delta) < Score::whole(static_cast<std::int64_t>(n))) return std::nullopt;

    std::vector<int> succ(n, -1), pred(n, -1);
    int start = 0, finish = -1;
    for (const auto& a : alpha.adjacencies()) {
        if (a.telomeric()) {
            if (red.variant == HalvingVariant::circular) return std::nullopt;
            if (end_of(a.x) == End::tail) start = gene_of(a.x) - 1;
            else finish = gene_of(a.x) - 1;
            continue;
        }
        if (end_of(a.x) == end_of(a.y)) return std::nullopt;
        ExtremityIndex head = end_of(a.x) == End::head ? a.x : a.y, tail = head == a.x ? a.y : a.x;
        int x = gene_of(head) - 1, y = gene_of(tail) - 1;
        succ[static_cast<std::size_t>(x)] = y;
        pred[static_cast<std::size_t>(y)] = x;
    }
    if (red.variant == HalvingVariant::linear) {
        if (!red.removed_arc || start != red.removed_arc->second || finish != red.removed_arc->first) return std::nullopt;
        if (pred[static_cast<std::size_t>(start)] != -1) return std::nullopt;
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    int v = start;
    while (v != -1 && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        int w = succ[static_cast<std::size_t>(v)];
        if (w != -1 && !red.graph.has_arc(v, w)) return std::nullopt;
        v = w;
    }
    if (order.size() != n) return std::nullopt;
    if (red.variant == HalvingVariant::circular && v != start) return std::nullopt;
    if (red.variant == HalvingVariant::linear && (v != -1 || order.back() != finish)) return std::nullopt;
    return order;
}

} // namespace bptk
