#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bptk/genome.hpp"
#include "bptk/graphs.hpp"

namespace bptk {

/*
 * Cubic Max-Cut as a breakpoint quartet ((pi1, pi2), (pi3, pi4)).
 *
 * Vertex gadget (12 extremities): a cycle alternating pi1 (red) and pi2
 * (green) edges
 *     c1 m1 c1' i1 c2 m2 c2' i2 c3 m3 c3' i3 (back to c1)
 * red = {c_k m_k, c_k' i_k}, green = {m_k c_k', i_k c_k+1}. Port k is the
 * corner-middle-corner triple (c_k, m_k, c_k'); its port edges are the red
 * c_k m_k and the green m_k c_k'. Port k carries the k-th incident edge and
 * intermediate i_k is handed to that edge.
 *
 * Edge gadget uv (6 extremities): ladder la lb lc ld with red-green double
 * rungs la lb, lc ld; auxiliaries t1 t2 with a red-green double t1 t2. With
 * port (a, m1, b) of u and (c, m2, d) of v, the blue 10-cycle
 *     m1 a la ld d m2 c lc lb b (back to m1)
 * alternates pi3 (X rail) and pi4 (Y rail); t1 i_u and t2 i_v are blue
 * doubles.
 *
 * An encoded cut scores 6 per vertex gadget, 6 + 9 per edge gadget on the
 * two sides, and 1 or 2 for the common port edges of each edge gadget: 20m + c.
 */
enum class ExtremityClass : std::uint8_t { corner, middle, intermediate, auxiliary, ladder };

std::string to_string(ExtremityClass c);

struct Port {
    ExtremityIndex red_corner;
    ExtremityIndex middle;
    ExtremityIndex green_corner;
};

struct VertexGadget {
    int vertex;
    std::array<ExtremityIndex, 12> cycle;
    std::array<Port, 3> ports;
    std::array<ExtremityIndex, 3> intermediates;
    // graph edge attached at each port
    std::array<std::size_t, 3> edges;
};

struct EdgeGadget {
    std::size_t edge;
    int u, v;
    int port_u, port_v;
    ExtremityIndex la, lb, lc, ld, t1, t2;
    ExtremityIndex iu, iv;
    std::array<Adjacency, 5> x_rail;
    std::array<Adjacency, 5> y_rail;
};

struct QuartetInstance {
    SimpleGraph graph;
    std::array<Genome, 4> pi;
    std::vector<ExtremityClass> classes;
    std::vector<VertexGadget> vertex_gadgets;
    std::vector<EdgeGadget> edge_gadgets;
    // vertex gadget holding each extremity, -1 for edge-gadget extremities
    std::vector<int> vertex_owner;
    // edge gadget whose blue edges cover each extremity
    std::vector<int> blue_owner;
    // edge gadget holding each ladder/auxiliary extremity, -1 otherwise
    std::vector<int> edge_owner;

    std::size_t m() const { return graph.edge_count(); }
    std::int64_t offset() const { return 20 * static_cast<std::int64_t>(m()); }
    std::size_t gene_count() const { return pi[0].gene_count(); }
};

// Throws std::invalid_argument unless g is cubic and connected.
QuartetInstance maxcut_to_quartet(const SimpleGraph& g);

// Rebuilds the gadget annotation of g around externally supplied genomes.
QuartetInstance quartet_with_genomes(const SimpleGraph& g, std::array<Genome, 4> pi);

std::pair<Genome, Genome> encode_cut(const QuartetInstance& inst, const CutColoring& coloring);

// Majority of the port edges in alpha1 per vertex gadget; ties go to red.
CutColoring decode_solution(const QuartetInstance& inst, const Genome& alpha1);

Score quartet_score(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2);

// Score split by gadget, in half units.
struct ScoreBreakdown {
    // sim(pi1, a1) + sim(pi2, a1) inside each vertex gadget
    std::vector<std::int64_t> vertex_x2;
    // sim(pi1, a1) + sim(pi2, a1) on ladder and auxiliary extremities
    std::vector<std::int64_t> edge_alpha1_x2;
    // sim(a2, pi3) + sim(a2, pi4) per edge gadget
    std::vector<std::int64_t> edge_alpha2_x2;
    // sim(a1, a2) on blue edges of each edge gadget
    std::vector<std::int64_t> overlap_x2;
    // anything not attributed to one gadget
    std::int64_t other_x2 = 0;
    Score total;
};

ScoreBreakdown score_breakdown(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2);

struct VerifyReport {
    bool ok = true;
    std::string failure;
    bool exhaustive = false;
    std::size_t colorings = 0;
    std::size_t max_cut = 0;
    Score best_encode_score;
    // observed [min, max] contribution per gadget, whole units
    std::vector<std::pair<Score, Score>> vertex_table;
    std::vector<std::pair<Score, Score>> edge_alpha1_table;
    std::vector<std::pair<Score, Score>> edge_alpha2_table;
    std::vector<std::pair<Score, Score>> overlap_table;

    std::string summary() const;
};

// Checks the structure and every accounting identity over all colorings when
// |V| <= 8 (or when exhaustive is set), otherwise over `samples` random ones.
VerifyReport verify_instance(const QuartetInstance& inst, bool exhaustive = false, std::size_t samples = 1000,
                             std::uint64_t seed = 1);

class NormalFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NormalizeResult {
    Genome alpha1;
    Genome alpha2;
    Score before;
    Score after;
    CutColoring coloring;
    std::vector<std::string> log;
};

// alpha1' within pi1 u pi2, alpha2' within pi3 u pi4, score not lower.
NormalizeResult normalize(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2);

// Every non-telomeric adjacency of alpha lies in p or q, and alpha has no telomeres.
bool supported_by(const Genome& alpha, const Genome& p, const Genome& q);

// Steinerization scores of the three quartet topologies over pi1..pi4, best
// of the nearest-leaf start and `restarts` random starts. A heuristic lower
// bound on each topology's optimum, not the optimum itself.
struct TopologyScore {
    std::string topology;
    Score score;
};
std::vector<TopologyScore> compare_topologies(const QuartetInstance& inst, std::size_t restarts = 4,
                                              std::uint64_t seed = 1);

} // namespace bptk
