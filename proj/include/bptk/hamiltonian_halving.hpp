#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bptk/genome.hpp"
#include "bptk/graphs.hpp"

namespace bptk {

enum class HalvingVariant { circular, linear };

/*
 * Directed Hamiltonian cycle (path) as genome halving. The digraph has all
 * in- and out-degrees equal to 2, so an Euler circuit visits every vertex
 * twice; listing the visits gives a single chromosome over two copies of
 * each vertex-gene (copy 1 on the first visit). Vertex v is gene v+1.
 *
 * Linear variant: the removed arc x->y is dropped and the Euler path from y
 * to x becomes a linear chromosome capped at y^1 tail and x^2 head. Its
 * target is a Hamiltonian path from y to x.
 */
struct HalvingReduction {
    Digraph graph;
    HalvingVariant variant = HalvingVariant::circular;
    std::optional<std::pair<int, int>> removed_arc;
    // vertex visit order along the Euler circuit (path)
    std::vector<int> walk;
    DuplicatedGenome delta;
};

// Throws std::invalid_argument when a degree is not 2, the graph is not
// connected, or the removed arc is absent.
HalvingReduction hamiltonian_to_halving(const Digraph& d, HalvingVariant variant,
                                        std::optional<std::pair<int, int>> removed_arc = std::nullopt);

// The Hamiltonian cycle (from vertex 0) or path encoded by alpha, if alpha
// reaches double similarity n; absent otherwise.
std::optional<std::vector<int>> halving_to_hamiltonian(const HalvingReduction& red, const Genome& alpha);

// Euler circuit from `start` (Hierholzer, arcs taken in input order);
// vertex sequence with start repeated at the end. The arc with index `skip`
// is left out.
std::vector<int> euler_walk(const Digraph& d, int start, std::optional<std::size_t> skip = std::nullopt);

} // namespace bptk
