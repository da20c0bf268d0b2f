#pragma once

// Random instance generators shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bptk/genome.hpp"

namespace bptk::testing {

using Rng = std::mt19937_64;

inline std::vector<std::int32_t> random_signed_permutation(Rng& rng, std::size_t n) {
    std::vector<std::int32_t> genes(n);
    std::iota(genes.begin(), genes.end(), 1);
    std::shuffle(genes.begin(), genes.end(), rng);
    for (auto& g : genes)
        if (rng() & 1) g = -g;
    return genes;
}

// uniform random perfect matching on the 2n extremities
inline Genome random_general(Rng& rng, std::size_t n) {
    std::vector<ExtremityIndex> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<ExtremityIndex> mates(2 * n, kFree);
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
        mates[static_cast<std::size_t>(order[i])] = order[i + 1];
        mates[static_cast<std::size_t>(order[i + 1])] = order[i];
    }
    return Genome::from_mates(std::move(mates), Model::general);
}

// random matching; every unmatched extremity is capped by a telomere
inline Genome random_mixed(Rng& rng, std::size_t n) {
    std::vector<ExtremityIndex> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t pairs = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    std::vector<ExtremityIndex> mates(2 * n, kTelomere);
    for (std::size_t i = 0; i < pairs; ++i) {
        mates[static_cast<std::size_t>(order[2 * i])] = order[2 * i + 1];
        mates[static_cast<std::size_t>(order[2 * i + 1])] = order[2 * i];
    }
    return Genome::from_mates(std::move(mates), Model::mixed);
}

inline Genome random_circular(Rng& rng, std::size_t n) {
    std::vector<Chromosome> c{{Chromosome::Kind::circular, random_signed_permutation(rng, n)}};
    return Genome::from_chromosomes(n, c, Model::circular);
}

inline Genome random_linear(Rng& rng, std::size_t n) {
    std::vector<Chromosome> c{{Chromosome::Kind::linear, random_signed_permutation(rng, n)}};
    return Genome::from_chromosomes(n, c, Model::linear);
}

inline Genome random_of_model(Rng& rng, std::size_t n, Model m) {
    switch (m) {
    case Model::general: return random_general(rng, n);
    case Model::mixed: return random_mixed(rng, n);
    case Model::circular: return random_circular(rng, n);
    case Model::linear: return random_linear(rng, n);
    case Model::multilinear: {
        auto genes = random_signed_permutation(rng, n);
        std::vector<Chromosome> cs;
        std::size_t at = 0;
        while (at < n) {
            std::size_t len = 1 + rng() % (n - at);
            cs.push_back({Chromosome::Kind::linear,
                          {genes.begin() + static_cast<std::ptrdiff_t>(at),
                           genes.begin() + static_cast<std::ptrdiff_t>(at + len)}});
            at += len;
        }
        return Genome::from_chromosomes(n, cs, Model::multilinear);
    }
    }
    return Genome();
}

// random duplicated genome: a random genome over the doubled universe
inline DuplicatedGenome random_duplicated(Rng& rng, std::size_t n, Model m) {
    Genome d = m == Model::mixed ? random_mixed(rng, 2 * n) : random_general(rng, 2 * n);
    return DuplicatedGenome(d);
}

// Adjacency-set similarity, computed without the library's mate walk.
inline std::int64_t set_similarity_x2(const Genome& a, const Genome& b) {
    auto as = a.adjacencies(), bs = b.adjacencies();
    std::set<Adjacency> sb(bs.begin(), bs.end());
    std::int64_t x2 = 0;
    for (const auto& adj : as)
        if (sb.count(adj)) x2 += adj.telomeric() ? 1 : 2;
    return x2;
}

} // namespace bptk::testing
