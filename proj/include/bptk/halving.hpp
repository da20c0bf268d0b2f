#pragma once

#include <cstddef>

#include "bptk/genome.hpp"
#include "bptk/median.hpp"

namespace bptk {

struct HalvingResult {
    Genome alpha;
    // dd(alpha, delta)
    Score dd;
};

// Minimizes dd(alpha, delta) over general or mixed genomes in linear time:
// every extremity has at most two candidate partners, so after taking the
// doubly supported pairs the rest is a union of paths and cycles.
HalvingResult halve(const DuplicatedGenome& delta, Model model);

struct GuidedHalvingResult {
    Genome alpha;
    Score dd;
    Score d;
    // dd + d
    Score total;
};

// Minimizes dd(alpha, delta) + d(alpha, rho).
GuidedHalvingResult guided_halve(const DuplicatedGenome& delta, const Genome& rho, Model model);

// Candidate counts of the halving weight graph: for base extremities x, y the
// number of adjacencies x^i y^j in delta; telomeric counts per copy.
std::vector<AdjacencyCount> halving_counts(const DuplicatedGenome& delta);

// Exhaustive oracles over every genome of the given model (any model tag).
inline constexpr std::size_t kBruteForceHalvingLimit = 6;
HalvingResult brute_force_halve(const DuplicatedGenome& delta, Model model);
GuidedHalvingResult brute_force_guided_halve(const DuplicatedGenome& delta, const Genome& rho, Model model);

} // namespace bptk
