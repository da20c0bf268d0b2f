#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "bptk/genome.hpp"
#include "bptk/graphs.hpp"

namespace bptk {

/*
 * Cubic maximum matching as a three-genome median.
 *
 * Edge ends get colors 0,1,2 in edge-index order at every vertex. An edge
 * whose two ends disagree is subdivided x-u-v-y (colors c_x, third, c_y).
 * The resulting graph H is duplicated into H and H'; each degree-2 vertex w
 * (missing color c) gets auxiliaries a_w, a_w' with edges w a_w and w' a_w'
 * of color c and a double edge a_w a_w' in the two other colors. Every
 * vertex then sees each color once, so the color classes are three perfect
 * matchings: the genomes. Vertex k is extremity k.
 *
 * Layout: H vertices [0, h), copies [h, 2h), auxiliaries [2h, 2h + 4s).
 * Original vertex x keeps id x; subdivision vertices follow.
 */
struct MedianReduction {
    struct Subdivision {
        std::size_t edge;
        int x, u, v, y;
    };

    SimpleGraph graph;
    std::array<Genome, 3> genomes;
    // color of each edge end: end_color[e] = {color at first, color at second}
    std::vector<std::array<int, 2>> end_color;
    std::vector<Subdivision> subdivisions;
    std::size_t h_vertices = 0;

    std::size_t extremity_count() const { return genomes[0].extremity_count(); }
};

// Bound on extremity_count() / |E| for every cubic input.
inline constexpr std::size_t kMedianReductionSlope = 10;

MedianReduction matching_to_median(const SimpleGraph& g);

// Matching of the original graph (edge indices, ascending) read off a median:
// the better of the two copies, with x-u-v-y counted as xy when x u and v y
// are both adjacencies.
std::vector<std::size_t> median_to_matching(const MedianReduction& inst, const Genome& alpha);

// g with edge e replaced by the path x-u-v-y (u, v appended as new vertices).
SimpleGraph subdivide_edge(const SimpleGraph& g, std::size_t e);

} // namespace bptk
