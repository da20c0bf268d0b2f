#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bptk/genome.hpp"

namespace bptk {

using NodeId = std::int32_t;

// Unrooted tree; nodes of degree <= 1 are leaves.
class PhyloTree {
public:
    PhyloTree() = default;
    // Throws std::invalid_argument unless the edges form a tree on node_count nodes.
    PhyloTree(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
              std::vector<std::string> names = {});

    std::size_t node_count() const { return adj_.size(); }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    const std::vector<NodeId>& neighbours(NodeId v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool is_leaf(NodeId v) const { return neighbours(v).size() <= 1; }
    std::vector<NodeId> leaves() const;
    std::vector<NodeId> internal_nodes() const;
    const std::string& name(NodeId v) const { return names_[static_cast<std::size_t>(v)]; }
    std::optional<NodeId> find(const std::string& name) const;

private:
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::string> names_;
};

// Genome per node id; leaves are bound by the instance, internal nodes by
// the assignment.
using Assignment = std::vector<std::optional<Genome>>;

class UnboundNodeError : public std::invalid_argument {
public:
    explicit UnboundNodeError(NodeId v);
};

// Sum of similarities over the tree edges.
Score tree_score(const PhyloTree& tree, const Assignment& genomes);

enum class SteinerInit { nearest_leaf, random };

struct SteinerOptions {
    SteinerInit init = SteinerInit::nearest_leaf;
    std::uint64_t seed = 0;
    std::size_t max_rounds = 1000;
};

struct SteinerResult {
    Assignment genomes;
    Score score;
    // full sweeps performed
    std::size_t rounds = 0;
    // tree score at the start and after every accepted replacement
    std::vector<Score> history;
};

// Local search: internal nodes, in increasing id, are replaced by a median of
// their neighbours whenever that strictly raises their local score. Stops
// after a sweep without change or after max_rounds sweeps.
SteinerResult steinerize(const PhyloTree& tree, const Assignment& leaves, Model model,
                         const SteinerOptions& options = {});
// Same search from a fully bound starting assignment.
SteinerResult steinerize_from(const PhyloTree& tree, Assignment start, Model model, std::size_t max_rounds);

// S(a1, a2) on the quartet ((p1, p2), (p3, p4)).
Score quartet_score(const Genome& p1, const Genome& p2, const Genome& p3, const Genome& p4, const Genome& a1,
                    const Genome& a2);

// Uniform random genome of the general or mixed model.
Genome random_genome(std::size_t gene_count, Model model, std::mt19937_64& rng);

} // namespace bptk
