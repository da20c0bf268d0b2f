#include "bptk/phylogeny.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "bptk/median.hpp"

namespace bptk {

PhyloTree::PhyloTree(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                     std::vector<std::string> names)
    : edges_(std::move(edges)), adj_(node_count), names_(std::move(names)) {
    if (node_count == 0) throw std::invalid_argument("empty tree");
    if (edges_.size() + 1 != node_count) throw std::invalid_argument("a tree on k nodes has k-1 edges");
    if (names_.empty()) {
        for (std::size_t v = 0; v < node_count; ++v) names_.push_back(std::to_string(v));
    }
    if (names_.size() != node_count) throw std::invalid_argument("one name per node required");
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= node_count || u == v) {
            throw std::invalid_argument("bad tree edge");
        }
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::vector<char> seen(node_count, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : neighbours(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != node_count) throw std::invalid_argument("tree is not connected");
}

std::vector<NodeId> PhyloTree::leaves() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < static_cast<NodeId>(node_count()); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<NodeId> PhyloTree::internal_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < static_cast<NodeId>(node_count()); ++v)
        if (!is_leaf(v)) out.push_back(v);
    return out;
}

std::optional<NodeId> PhyloTree::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<NodeId>(it - names_.begin());
}

UnboundNodeError::UnboundNodeError(NodeId v)
    : std::invalid_argument("tree node " + std::to_string(v) + " has no genome") {}

Score tree_score(const PhyloTree& tree, const Assignment& genomes) {
    if (genomes.size() != tree.node_count()) throw std::invalid_argument("assignment size differs from tree");
    Score total;
    for (auto [u, v] : tree.edges()) {
        const auto& a = genomes[static_cast<std::size_t>(u)];
        const auto& b = genomes[static_cast<std::size_t>(v)];
        if (!a) throw UnboundNodeError(u);
        if (!b) throw UnboundNodeError(v);
        total += similarity(*a, *b);
    }
    return total;
}

Genome random_genome(std::size_t gene_count, Model model, std::mt19937_64& rng) {
    if (model != Model::general && model != Model::mixed) throw HardModelError("random initialization", model);
    std::vector<ExtremityIndex> order(2 * gene_count);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t pairs = gene_count;
    if (model == Model::mixed) pairs = std::uniform_int_distribution<std::size_t>(0, gene_count)(rng);
    std::vector<ExtremityIndex> mates(2 * gene_count, kTelomere);
    for (std::size_t i = 0; i < pairs; ++i) {
        mates[static_cast<std::size_t>(order[2 * i])] = order[2 * i + 1];
        mates[static_cast<std::size_t>(order[2 * i + 1])] = order[2 * i];
    }
    return Genome::from_mates(std::move(mates), model);
}

namespace {

Score local_score(const PhyloTree& tree, const Assignment& g, NodeId v, const Genome& candidate) {
    Score s;
    for (NodeId w : tree.neighbours(v)) s += similarity(candidate, *g[static_cast<std::size_t>(w)]);
    return s;
}

// A leaf copied to an internal node of the general model loses its telomeres.
Genome conform(const Genome& g, Model model) {
    if (model == Model::mixed) return g.with_model(model);
    Matching m(g.extremity_count());
    for (const auto& a : g.adjacencies())
        if (!a.telomeric()) m.add(a.x, a.y);
    return complete_matching_to_genome(m, g.gene_count(), model);
}

} // namespace

SteinerResult steinerize_from(const PhyloTree& tree, Assignment start, Model model, std::size_t max_rounds) {
    if (model != Model::general && model != Model::mixed) throw HardModelError("the breakpoint median", model);
    SteinerResult result;
    result.genomes = std::move(start);
    result.score = tree_score(tree, result.genomes);
    result.history.push_back(result.score);
    const auto internal = tree.internal_nodes();
    bool changed = true;
    while (changed && result.rounds < max_rounds) {
        changed = false;
        ++result.rounds;
        for (NodeId v : internal) {
            std::vector<Genome> around;
            for (NodeId w : tree.neighbours(v)) around.push_back(*result.genomes[static_cast<std::size_t>(w)]);
            MedianResult med = median(around, model);
            Score now = local_score(tree, result.genomes, v, *result.genomes[static_cast<std::size_t>(v)]);
            if (med.score > now) {
                result.genomes[static_cast<std::size_t>(v)] = med.alpha;
                result.score += med.score - now;
                result.history.push_back(result.score);
                changed = true;
            }
        }
    }
    return result;
}

SteinerResult steinerize(const PhyloTree& tree, const Assignment& leaves, Model model,
                         const SteinerOptions& options) {
    if (leaves.size() != tree.node_count()) throw std::invalid_argument("assignment size differs from tree");
    Assignment start = leaves;
    for (NodeId v : tree.leaves()) {
        if (!start[static_cast<std::size_t>(v)]) throw UnboundNodeError(v);
    }
    const std::size_t n = start[static_cast<std::size_t>(tree.leaves().front())]->gene_count();
    for (NodeId v : tree.internal_nodes()) start[static_cast<std::size_t>(v)].reset();

    if (options.init == SteinerInit::random) {
        std::mt19937_64 rng(options.seed);
        for (NodeId v : tree.internal_nodes()) start[static_cast<std::size_t>(v)] = random_genome(n, model, rng);
    } else {
        // multi-source BFS; ties go to the leaf with the smaller id
        std::deque<NodeId> queue;
        std::vector<char> seen(tree.node_count(), 0);
        for (NodeId v : tree.leaves()) {
            queue.push_back(v);
            seen[static_cast<std::size_t>(v)] = 1;
        }
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            for (NodeId w : tree.neighbours(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                start[static_cast<std::size_t>(w)] = conform(*start[static_cast<std::size_t>(v)], model);
                queue.push_back(w);
            }
        }
    }
    return steinerize_from(tree, std::move(start), model, options.max_rounds);
}

Score quartet_score(const Genome& p1, const Genome& p2, const Genome& p3, const Genome& p4, const Genome& a1,
                    const Genome& a2) {
    return similarity(p1, a1) + similarity(p2, a1) + similarity(a1, a2) + similarity(a2, p3) + similarity(a2, p4);
}

} // namespace bptk
