#include "bptk/quartet.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "bptk/median.hpp"
#include "bptk/phylogeny.hpp"

namespace bptk {

std::string to_string(ExtremityClass c) {
    switch (c) {
    case ExtremityClass::corner: return "C";
    case ExtremityClass::middle: return "M";
    case ExtremityClass::intermediate: return "I";
    case ExtremityClass::auxiliary: return "A";
    case ExtremityClass::ladder: return "L";
    }
    return "?";
}

namespace {

constexpr int kVertexSize = 12;
constexpr int kEdgeSize = 6;

ExtremityIndex corner_at(int v, int k) { return kVertexSize * v + 4 * k; }
ExtremityIndex middle_at(int v, int k) { return kVertexSize * v + 4 * k + 1; }
ExtremityIndex green_corner_at(int v, int k) { return kVertexSize * v + 4 * k + 2; }
ExtremityIndex intermediate_at(int v, int k) { return kVertexSize * v + 4 * k + 3; }

int port_of(const SimpleGraph& g, int v, std::size_t e) {
    const auto& inc = g.incident(v);
    return static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
}

bool has(const Genome& g, const Adjacency& a) { return g.mate(a.x) == a.y; }

void put(std::vector<ExtremityIndex>& mates, const Adjacency& a) {
    mates[static_cast<std::size_t>(a.x)] = a.y;
    mates[static_cast<std::size_t>(a.y)] = a.x;
}

std::string cut_label(const CutColoring& coloring) {
    std::string s;
    for (bool green : coloring) s += green ? 'G' : 'R';
    return s;
}

QuartetInstance annotate(const SimpleGraph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("max-cut reduction needs a cubic graph");
    if (!g.is_connected()) throw std::invalid_argument("max-cut reduction needs a connected graph");

    QuartetInstance inst;
    inst.graph = g;
    const int V = static_cast<int>(g.vertex_count());
    const int E = static_cast<int>(g.edge_count());
    const std::size_t N = static_cast<std::size_t>(kVertexSize * V + kEdgeSize * E);
    inst.classes.assign(N, ExtremityClass::corner);
    inst.vertex_owner.assign(N, -1);
    inst.blue_owner.assign(N, -1);
    inst.edge_owner.assign(N, -1);

    for (int v = 0; v < V; ++v) {
        VertexGadget vg{};
        vg.vertex = v;
        for (int k = 0; k < 3; ++k) {
            vg.cycle[static_cast<std::size_t>(4 * k)] = corner_at(v, k);
            vg.cycle[static_cast<std::size_t>(4 * k + 1)] = middle_at(v, k);
            vg.cycle[static_cast<std::size_t>(4 * k + 2)] = green_corner_at(v, k);
            vg.cycle[static_cast<std::size_t>(4 * k + 3)] = intermediate_at(v, k);
            vg.ports[static_cast<std::size_t>(k)] = {corner_at(v, k), middle_at(v, k), green_corner_at(v, k)};
            vg.intermediates[static_cast<std::size_t>(k)] = intermediate_at(v, k);
            vg.edges[static_cast<std::size_t>(k)] = g.incident(v)[static_cast<std::size_t>(k)];
            inst.classes[static_cast<std::size_t>(middle_at(v, k))] = ExtremityClass::middle;
            inst.classes[static_cast<std::size_t>(intermediate_at(v, k))] = ExtremityClass::intermediate;
        }
        for (ExtremityIndex x : vg.cycle) inst.vertex_owner[static_cast<std::size_t>(x)] = v;
        inst.vertex_gadgets.push_back(vg);
    }

    for (int e = 0; e < E; ++e) {
        const auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        EdgeGadget eg{};
        eg.edge = static_cast<std::size_t>(e);
        eg.u = u;
        eg.v = v;
        eg.port_u = port_of(g, u, eg.edge);
        eg.port_v = port_of(g, v, eg.edge);
        const ExtremityIndex base = kVertexSize * V + kEdgeSize * e;
        eg.la = base;
        eg.lb = base + 1;
        eg.lc = base + 2;
        eg.ld = base + 3;
        eg.t1 = base + 4;
        eg.t2 = base + 5;
        eg.iu = intermediate_at(u, eg.port_u);
        eg.iv = intermediate_at(v, eg.port_v);
        const ExtremityIndex a = corner_at(u, eg.port_u), m1 = middle_at(u, eg.port_u),
                             b = green_corner_at(u, eg.port_u);
        const ExtremityIndex c = corner_at(v, eg.port_v), m2 = middle_at(v, eg.port_v),
                             d = green_corner_at(v, eg.port_v);
        // blue 10-cycle m1 a la ld d m2 c lc lb b
        eg.x_rail = {Adjacency::of(m1, a), Adjacency::of(eg.la, eg.ld), Adjacency::of(d, m2),
                     Adjacency::of(c, eg.lc), Adjacency::of(eg.lb, b)};
        eg.y_rail = {Adjacency::of(a, eg.la), Adjacency::of(eg.ld, d), Adjacency::of(m2, c),
                     Adjacency::of(eg.lc, eg.lb), Adjacency::of(b, m1)};
        for (ExtremityIndex x : {eg.la, eg.lb, eg.lc, eg.ld}) inst.classes[static_cast<std::size_t>(x)] = ExtremityClass::ladder;
        for (ExtremityIndex x : {eg.t1, eg.t2}) inst.classes[static_cast<std::size_t>(x)] = ExtremityClass::auxiliary;
        for (ExtremityIndex x : {eg.la, eg.lb, eg.lc, eg.ld, eg.t1, eg.t2}) inst.edge_owner[static_cast<std::size_t>(x)] = e;
        for (ExtremityIndex x : {a, m1, b, c, m2, d, eg.la, eg.lb, eg.lc, eg.ld, eg.t1, eg.t2, eg.iu, eg.iv})
            inst.blue_owner[static_cast<std::size_t>(x)] = e;
        inst.edge_gadgets.push_back(eg);
    }
    return inst;
}

std::vector<Adjacency> red_edges(const VertexGadget& vg) {
    std::vector<Adjacency> out;
    for (std::size_t i = 0; i < 12; i += 2) out.push_back(Adjacency::of(vg.cycle[i], vg.cycle[i + 1]));
    return out;
}

std::vector<Adjacency> green_edges(const VertexGadget& vg) {
    std::vector<Adjacency> out;
    for (std::size_t i = 1; i < 12; i += 2) out.push_back(Adjacency::of(vg.cycle[i], vg.cycle[(i + 1) % 12]));
    return out;
}

std::vector<Adjacency> doubles(const EdgeGadget& eg) {
    return {Adjacency::of(eg.la, eg.lb), Adjacency::of(eg.lc, eg.ld), Adjacency::of(eg.t1, eg.t2)};
}

std::vector<Adjacency> blue_doubles(const EdgeGadget& eg) {
    return {Adjacency::of(eg.t1, eg.iu), Adjacency::of(eg.t2, eg.iv)};
}

} // namespace

QuartetInstance maxcut_to_quartet(const SimpleGraph& g) {
    QuartetInstance inst = annotate(g);
    const std::size_t N = inst.classes.size();
    std::array<std::vector<ExtremityIndex>, 4> mates;
    for (auto& m : mates) m.assign(N, kFree);
    for (const auto& vg : inst.vertex_gadgets) {
        for (const auto& a : red_edges(vg)) put(mates[0], a);
        for (const auto& a : green_edges(vg)) put(mates[1], a);
    }
    for (const auto& eg : inst.edge_gadgets) {
        for (const auto& a : doubles(eg)) {
            put(mates[0], a);
            put(mates[1], a);
        }
        for (const auto& a : eg.x_rail) put(mates[2], a);
        for (const auto& a : eg.y_rail) put(mates[3], a);
        for (const auto& a : blue_doubles(eg)) {
            put(mates[2], a);
            put(mates[3], a);
        }
    }
    for (std::size_t i = 0; i < 4; ++i) inst.pi[i] = Genome::from_mates(std::move(mates[i]), Model::general);
    return inst;
}

QuartetInstance quartet_with_genomes(const SimpleGraph& g, std::array<Genome, 4> pi) {
    QuartetInstance inst = annotate(g);
    for (const auto& p : pi)
        if (p.extremity_count() != inst.classes.size())
            throw GeneSetMismatch(p.gene_count(), inst.classes.size() / 2);
    inst.pi = std::move(pi);
    return inst;
}

std::pair<Genome, Genome> encode_cut(const QuartetInstance& inst, const CutColoring& coloring) {
    if (coloring.size() != inst.graph.vertex_count()) throw std::invalid_argument("coloring size mismatch");
    const std::size_t N = inst.classes.size();
    std::vector<ExtremityIndex> a1(N, kFree), a2(N, kFree);
    for (const auto& vg : inst.vertex_gadgets)
        for (const auto& a : coloring[static_cast<std::size_t>(vg.vertex)] ? green_edges(vg) : red_edges(vg))
            put(a1, a);
    for (const auto& eg : inst.edge_gadgets)
        for (const auto& a : doubles(eg)) put(a1, a);
    for (const auto& eg : inst.edge_gadgets) {
        auto overlap = [&](const std::array<Adjacency, 5>& rail) {
            return std::count_if(rail.begin(), rail.end(), [&](const Adjacency& a) {
                return a1[static_cast<std::size_t>(a.x)] == a.y;
            });
        };
        const auto& rail = overlap(eg.x_rail) >= overlap(eg.y_rail) ? eg.x_rail : eg.y_rail;
        for (const auto& a : rail) put(a2, a);
        for (const auto& a : blue_doubles(eg)) put(a2, a);
    }
    return {Genome::from_mates(std::move(a1), Model::general), Genome::from_mates(std::move(a2), Model::general)};
}

CutColoring decode_solution(const QuartetInstance& inst, const Genome& alpha1) {
    if (alpha1.extremity_count() != inst.classes.size())
        throw GeneSetMismatch(alpha1.gene_count(), inst.gene_count());
    CutColoring coloring(inst.graph.vertex_count(), false);
    for (const auto& vg : inst.vertex_gadgets) {
        int red = 0, green = 0;
        for (const auto& p : vg.ports) {
            red += alpha1.has_adjacency(p.red_corner, p.middle);
            green += alpha1.has_adjacency(p.middle, p.green_corner);
        }
        coloring[static_cast<std::size_t>(vg.vertex)] = green > red;
    }
    return coloring;
}

Score quartet_score(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2) {
    return quartet_score(inst.pi[0], inst.pi[1], inst.pi[2], inst.pi[3], alpha1, alpha2);
}

ScoreBreakdown score_breakdown(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2) {
    ScoreBreakdown out;
    out.vertex_x2.assign(inst.vertex_gadgets.size(), 0);
    out.edge_alpha1_x2.assign(inst.edge_gadgets.size(), 0);
    out.edge_alpha2_x2.assign(inst.edge_gadgets.size(), 0);
    out.overlap_x2.assign(inst.edge_gadgets.size(), 0);
    out.total = quartet_score(inst, alpha1, alpha2);

    std::int64_t attributed = 0;
    for (const auto& a : alpha1.adjacencies()) {
        if (a.telomeric()) continue;
        const std::int64_t w = 2 * (has(inst.pi[0], a) + has(inst.pi[1], a));
        if (w == 0) continue;
        const int vx = inst.vertex_owner[static_cast<std::size_t>(a.x)];
        const int ex = inst.edge_owner[static_cast<std::size_t>(a.x)];
        if (vx >= 0 && vx == inst.vertex_owner[static_cast<std::size_t>(a.y)]) {
            out.vertex_x2[static_cast<std::size_t>(vx)] += w;
        } else if (ex >= 0 && ex == inst.edge_owner[static_cast<std::size_t>(a.y)]) {
            out.edge_alpha1_x2[static_cast<std::size_t>(ex)] += w;
        } else {
            continue;
        }
        attributed += w;
    }
    for (const auto& a : alpha2.adjacencies()) {
        if (a.telomeric()) continue;
        const std::int64_t w = 2 * (has(inst.pi[2], a) + has(inst.pi[3], a));
        const int bx = inst.blue_owner[static_cast<std::size_t>(a.x)];
        if (w == 0 || bx < 0 || bx != inst.blue_owner[static_cast<std::size_t>(a.y)]) continue;
        out.edge_alpha2_x2[static_cast<std::size_t>(bx)] += w;
        attributed += w;
    }
    for (const auto& a : alpha1.adjacencies()) {
        if (a.telomeric() || !has(alpha2, a)) continue;
        // only blue adjacencies count as gadget overlap
        if (!has(inst.pi[2], a) && !has(inst.pi[3], a)) continue;
        const int bx = inst.blue_owner[static_cast<std::size_t>(a.x)];
        if (bx < 0 || bx != inst.blue_owner[static_cast<std::size_t>(a.y)]) continue;
        out.overlap_x2[static_cast<std::size_t>(bx)] += 2;
        attributed += 2;
    }
    out.other_x2 = out.total.half_units() - attributed;
    return out;
}

namespace {

// Gene counts and perfect matchings; everything the identities rely on.
bool check_genomes(const QuartetInstance& inst, std::string& failure) {
    auto fail = [&](const std::string& msg) {
        failure = msg;
        return false;
    };
    const std::size_t N = inst.classes.size();
    for (std::size_t i = 0; i < 4; ++i) {
        const Genome& p = inst.pi[i];
        if (p.extremity_count() != N) return fail("pi" + std::to_string(i + 1) + ": wrong gene count");
        if (!validate(p, Model::general).ok()) return fail("pi" + std::to_string(i + 1) + ": not a perfect matching");
    }
    return true;
}

bool check_layout(const QuartetInstance& inst, std::string& failure) {
    auto fail = [&](const std::string& msg) {
        failure = msg;
        return false;
    };
    const std::size_t N = inst.classes.size();
    std::size_t doubles_12 = 0, doubles_34 = 0;
    for (const auto& a : inst.pi[0].adjacencies()) doubles_12 += has(inst.pi[1], a);
    for (const auto& a : inst.pi[2].adjacencies()) doubles_34 += has(inst.pi[3], a);

    for (const auto& vg : inst.vertex_gadgets) {
        const std::string where = "vertex gadget " + std::to_string(vg.vertex);
        for (std::size_t i = 0; i < 12; ++i) {
            const Adjacency a = Adjacency::of(vg.cycle[i], vg.cycle[(i + 1) % 12]);
            if (!has(inst.pi[i % 2], a))
                return fail(where + ": cycle edge " + std::to_string(i) + " missing from pi" + std::to_string(i % 2 + 1));
        }
        std::size_t corners = 0, middles = 0, inter = 0;
        for (ExtremityIndex x : vg.cycle) {
            const auto c = inst.classes[static_cast<std::size_t>(x)];
            corners += c == ExtremityClass::corner;
            middles += c == ExtremityClass::middle;
            inter += c == ExtremityClass::intermediate;
        }
        if (corners != 6 || middles != 3 || inter != 3) return fail(where + ": does not expose exactly 3 ports");
    }
    for (const auto& eg : inst.edge_gadgets) {
        const std::string where = "edge gadget " + std::to_string(eg.edge);
        for (const auto& a : doubles(eg))
            if (!has(inst.pi[0], a) || !has(inst.pi[1], a)) return fail(where + ": rung or auxiliary double missing");
        for (const auto& a : eg.x_rail)
            if (!has(inst.pi[2], a)) return fail(where + ": blue rail edge missing from pi3");
        for (const auto& a : eg.y_rail)
            if (!has(inst.pi[3], a)) return fail(where + ": blue rail edge missing from pi4");
        for (const auto& a : blue_doubles(eg))
            if (!has(inst.pi[2], a) || !has(inst.pi[3], a)) return fail(where + ": blue double missing");
    }
    if (doubles_12 != 3 * inst.edge_gadgets.size()) return fail("pi1 and pi2 share unexpected adjacencies");
    if (doubles_34 != 2 * inst.edge_gadgets.size()) return fail("pi3 and pi4 share unexpected adjacencies");
    for (std::size_t x = 0; x < N; ++x)
        if (inst.blue_owner[x] < 0) return fail("extremity " + std::to_string(x) + " has no blue owner");
    return true;
}

void widen(std::vector<std::pair<Score, Score>>& table, const std::vector<std::int64_t>& x2, bool first) {
    table.resize(x2.size());
    for (std::size_t i = 0; i < x2.size(); ++i) {
        const Score s = Score::from_half_units(x2[i]);
        if (first) {
            table[i] = {s, s};
        } else {
            table[i].first = std::min(table[i].first, s);
            table[i].second = std::max(table[i].second, s);
        }
    }
}

// Returns an empty string when every identity holds for this coloring.
std::string check_coloring(const QuartetInstance& inst, const CutColoring& coloring, ScoreBreakdown& bd,
                           Score& score) {
    const auto [a1, a2] = encode_cut(inst, coloring);
    const std::string tag = " (coloring " + cut_label(coloring) + ")";
    if (!supported_by(a1, inst.pi[0], inst.pi[1])) return "alpha1 not within pi1 u pi2" + tag;
    if (!supported_by(a2, inst.pi[2], inst.pi[3])) return "alpha2 not within pi3 u pi4" + tag;
    bd = score_breakdown(inst, a1, a2);
    score = bd.total;
    for (std::size_t v = 0; v < bd.vertex_x2.size(); ++v)
        if (bd.vertex_x2[v] != 12)
            return "vertex gadget " + std::to_string(v) + ": contribution " +
                   Score::from_half_units(bd.vertex_x2[v]).to_string() + ", expected 6" + tag;
    for (std::size_t e = 0; e < bd.edge_alpha1_x2.size(); ++e) {
        const auto [u, v] = inst.graph.edges()[e];
        const std::string where = "edge gadget " + std::to_string(e) + " (" + std::to_string(u) + "-" +
                                  std::to_string(v) + ")";
        if (bd.edge_alpha1_x2[e] != 12)
            return where + ": alpha1-side contribution " + Score::from_half_units(bd.edge_alpha1_x2[e]).to_string() +
                   ", expected 6" + tag;
        if (bd.edge_alpha2_x2[e] != 18)
            return where + ": alpha2-side contribution " + Score::from_half_units(bd.edge_alpha2_x2[e]).to_string() +
                   ", expected 9" + tag;
        const bool cut = coloring[static_cast<std::size_t>(u)] != coloring[static_cast<std::size_t>(v)];
        if (bd.overlap_x2[e] != (cut ? 4 : 2))
            return where + ": overlap " + Score::from_half_units(bd.overlap_x2[e]).to_string() + ", expected " +
                   (cut ? "2" : "1") + tag;
    }
    if (bd.other_x2 != 0)
        return "unattributed contribution " + Score::from_half_units(bd.other_x2).to_string() + tag;
    const auto expected = Score::whole(inst.offset() + static_cast<std::int64_t>(cut_size(inst.graph, coloring)));
    if (score != expected) return "score " + score.to_string() + ", expected " + expected.to_string() + tag;
    if (decode_solution(inst, a1) != coloring) return "decode(encode(coloring)) differs" + tag;
    return {};
}

} // namespace

std::string VerifyReport::summary() const {
    if (!ok) return "violation: " + failure;
    std::ostringstream os;
    os << "all identities hold; offset " << (best_encode_score - Score::whole(static_cast<std::int64_t>(max_cut)))
       << "; maxcut " << max_cut << "; optimum encode score " << best_encode_score;
    return os.str();
}

VerifyReport verify_instance(const QuartetInstance& inst, bool exhaustive, std::size_t samples, std::uint64_t seed) {
    VerifyReport report;
    if (!check_genomes(inst, report.failure)) {
        report.ok = false;
        return report;
    }
    const std::size_t V = inst.graph.vertex_count();
    report.exhaustive = exhaustive || V <= 8;
    if (report.exhaustive && V > 24) throw std::invalid_argument("exhaustive verification limited to 24 vertices");

    std::mt19937_64 rng(seed);
    const std::uint64_t total = report.exhaustive ? (std::uint64_t{1} << V) : samples;
    bool first = true;
    for (std::uint64_t i = 0; i < total; ++i) {
        CutColoring coloring(V);
        for (std::size_t v = 0; v < V; ++v)
            coloring[v] = report.exhaustive ? ((i >> v) & 1) != 0 : (rng() & 1) != 0;
        ScoreBreakdown bd;
        Score score;
        std::string failure = check_coloring(inst, coloring, bd, score);
        ++report.colorings;
        if (!failure.empty()) {
            report.ok = false;
            report.failure = failure;
            return report;
        }
        widen(report.vertex_table, bd.vertex_x2, first);
        widen(report.edge_alpha1_table, bd.edge_alpha1_x2, first);
        widen(report.edge_alpha2_table, bd.edge_alpha2_x2, first);
        widen(report.overlap_table, bd.overlap_x2, first);
        const std::size_t c = cut_size(inst.graph, coloring);
        if (first || score > report.best_encode_score) report.best_encode_score = score;
        report.max_cut = std::max(report.max_cut, c);
        first = false;
    }
    if (!check_layout(inst, report.failure)) report.ok = false;
    return report;
}

bool supported_by(const Genome& alpha, const Genome& p, const Genome& q) {
    for (std::size_t x = 0; x < alpha.extremity_count(); ++x) {
        const ExtremityIndex y = alpha.mate(static_cast<ExtremityIndex>(x));
        if (y < 0) return false;
        const ExtremityIndex xi = static_cast<ExtremityIndex>(x);
        if (!p.has_adjacency(xi, y) && !q.has_adjacency(xi, y)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// normalize

namespace {

struct State {
    Genome a1, a2;
    Score score;
};

// Replace adjacency {p, q} and {z, w} by {p, z} and {q, w}. Telomeres travel along.
Genome exchange(const Genome& g, ExtremityIndex p, ExtremityIndex z) {
    std::vector<ExtremityIndex> m(g.mates().begin(), g.mates().end());
    const ExtremityIndex q = m[static_cast<std::size_t>(p)];
    const ExtremityIndex w = m[static_cast<std::size_t>(z)];
    m[static_cast<std::size_t>(p)] = z;
    m[static_cast<std::size_t>(z)] = p;
    if (q >= 0) m[static_cast<std::size_t>(q)] = w >= 0 ? w : kTelomere;
    if (w >= 0) m[static_cast<std::size_t>(w)] = q >= 0 ? q : kTelomere;
    const Model model = std::any_of(m.begin(), m.end(), [](ExtremityIndex y) { return y < 0; }) ? Model::mixed
                                                                                                : Model::general;
    return Genome::from_mates(std::move(m), model);
}

bool supported(const Genome& p, const Genome& q, ExtremityIndex x, ExtremityIndex y) {
    return y >= 0 && (p.has_adjacency(x, y) || q.has_adjacency(x, y));
}

bool any_pi(const QuartetInstance& inst, ExtremityIndex x, ExtremityIndex y) {
    return y >= 0 && std::any_of(inst.pi.begin(), inst.pi.end(), [&](const Genome& p) { return p.has_adjacency(x, y); });
}

bool is_port_edge(const QuartetInstance& inst, ExtremityIndex x, ExtremityIndex y) {
    if (y < 0) return false;
    const int v = inst.vertex_owner[static_cast<std::size_t>(x)];
    if (v < 0 || v != inst.vertex_owner[static_cast<std::size_t>(y)]) return false;
    for (const auto& p : inst.vertex_gadgets[static_cast<std::size_t>(v)].ports) {
        const Adjacency a = Adjacency::of(x, y);
        if (a == Adjacency::of(p.red_corner, p.middle) || a == Adjacency::of(p.middle, p.green_corner)) return true;
    }
    return false;
}

// Defect at extremity x of ancestor `which` (0 for alpha1, 1 for alpha2).
using DefectTest = bool (*)(const QuartetInstance&, const State&, int which, ExtremityIndex x);

const Genome& ancestor(const State& s, int which) { return which == 0 ? s.a1 : s.a2; }

bool unsupported_at(const QuartetInstance& inst, const State& s, int which, ExtremityIndex x) {
    const Genome& a = ancestor(s, which);
    return !supported(inst.pi[static_cast<std::size_t>(2 * which)], inst.pi[static_cast<std::size_t>(2 * which + 1)], x,
                      a.mate(x));
}

bool middle_defect(const QuartetInstance& inst, const State& s, int which, ExtremityIndex x) {
    return inst.classes[static_cast<std::size_t>(x)] == ExtremityClass::middle && unsupported_at(inst, s, which, x);
}

bool ladder_defect(const QuartetInstance& inst, const State& s, int which, ExtremityIndex x) {
    return inst.classes[static_cast<std::size_t>(x)] == ExtremityClass::ladder &&
           !any_pi(inst, x, ancestor(s, which).mate(x));
}

bool corner_defect(const QuartetInstance& inst, const State& s, int which, ExtremityIndex x) {
    if (which != 0 || inst.classes[static_cast<std::size_t>(x)] != ExtremityClass::corner) return false;
    const ExtremityIndex y = s.a1.mate(x);
    return y >= 0 && s.a2.has_adjacency(x, y) && !is_port_edge(inst, x, y);
}

bool support_defect(const QuartetInstance& inst, const State& s, int which, ExtremityIndex x) {
    return unsupported_at(inst, s, which, x);
}

std::size_t count_defects(const QuartetInstance& inst, const State& s, DefectTest test) {
    std::size_t n = 0;
    for (int which = 0; which < 2; ++which)
        for (std::size_t x = 0; x < inst.classes.size(); ++x) n += test(inst, s, which, static_cast<ExtremityIndex>(x));
    return n;
}

Score local_score(const Genome& a, const Genome& p, const Genome& q, const Genome& r) {
    return similarity(a, p) + similarity(a, q) + similarity(a, r);
}

// Median replacement until every internal node is a local optimum that keeps
// all adjacencies occurring twice among its neighbours.
std::size_t median_pass(const QuartetInstance& inst, State& s, std::size_t cap) {
    std::size_t moves = 0;
    const PhyloTree tree(6, {{0, 4}, {1, 4}, {4, 5}, {5, 2}, {5, 3}});
    for (std::size_t round = 0; round < cap; ++round) {
        Assignment start{inst.pi[0], inst.pi[1], inst.pi[2], inst.pi[3], s.a1, s.a2};
        const auto res = steinerize_from(tree, std::move(start), Model::general, cap);
        if (res.score >= s.score) {
            moves += res.history.size() - 1;
            s.a1 = *res.genomes[4];
            s.a2 = *res.genomes[5];
            s.score = res.score;
        }
        bool changed = false;
        for (int which = 0; which < 2; ++which) {
            Genome& a = which == 0 ? s.a1 : s.a2;
            const Genome& other = which == 0 ? s.a2 : s.a1;
            const Genome& p = inst.pi[static_cast<std::size_t>(2 * which)];
            const Genome& q = inst.pi[static_cast<std::size_t>(2 * which + 1)];
            const std::array<Genome, 3> nb{p, q, other};
            bool missing = false;
            for (const auto& c : count_adjacencies(nb))
                if (c.count >= 2 && !c.adjacency.telomeric() && !a.has_adjacency(c.adjacency.x, c.adjacency.y))
                    missing = true;
            if (!missing) continue;
            Genome med = median(nb, Model::general).alpha;
            if (local_score(med, p, q, other) >= local_score(a, p, q, other)) {
                a = std::move(med);
                changed = true;
                ++moves;
            }
        }
        if (!changed) break;
        s.score = quartet_score(inst, s.a1, s.a2);
    }
    return moves;
}

// 4-cycle exchanges that remove a counted defect without lowering the score.
std::size_t exchange_pass(const QuartetInstance& inst, State& s, DefectTest test, std::size_t cap) {
    std::size_t accepted = 0;
    std::size_t defects = count_defects(inst, s, test);
    std::size_t unsupported = count_defects(inst, s, support_defect);
    while (defects > 0 && accepted < cap) {
        bool improved = false;
        for (int which = 0; which < 2 && !improved; ++which) {
            for (std::size_t xi = 0; xi < inst.classes.size() && !improved; ++xi) {
                const auto x = static_cast<ExtremityIndex>(xi);
                if (!test(inst, s, which, x)) continue;
                for (std::size_t j = 0; j < 4 && !improved; ++j) {
                    const ExtremityIndex z = inst.pi[j].mate(x);
                    if (z < 0 || ancestor(s, which).mate(x) == z) continue;
                    // alone, and jointly in both ancestors
                    for (int joint = 0; joint < 2 && !improved; ++joint) {
                        State t = s;
                        if (which == 0 || joint) t.a1 = exchange(s.a1, x, z);
                        if (which == 1 || joint) t.a2 = exchange(s.a2, x, z);
                        t.score = quartet_score(inst, t.a1, t.a2);
                        if (t.score < s.score) continue;
                        const std::size_t d = count_defects(inst, t, test);
                        if (d < defects && count_defects(inst, t, support_defect) <= unsupported) {
                            unsupported = count_defects(inst, t, support_defect);
                            s = std::move(t);
                            defects = d;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (!improved) break;
        ++accepted;
    }
    return accepted;
}

bool normal(const QuartetInstance& inst, const Genome& a1, const Genome& a2) {
    return supported_by(a1, inst.pi[0], inst.pi[1]) && supported_by(a2, inst.pi[2], inst.pi[3]);
}

} // namespace

NormalizeResult normalize(const QuartetInstance& inst, const Genome& alpha1, const Genome& alpha2) {
    const std::size_t N = inst.classes.size();
    for (const Genome* a : {&alpha1, &alpha2})
        if (a->extremity_count() != N) throw GeneSetMismatch(a->gene_count(), N / 2);

    NormalizeResult out;
    out.before = quartet_score(inst, alpha1, alpha2);
    auto finish = [&](Genome a1, Genome a2, const std::string& how) {
        out.alpha1 = std::move(a1);
        out.alpha2 = std::move(a2);
        out.after = quartet_score(inst, out.alpha1, out.alpha2);
        out.coloring = decode_solution(inst, out.alpha1);
        out.log.push_back(how + ": score " + out.before.to_string() + " -> " + out.after.to_string());
        return out;
    };
    if (normal(inst, alpha1, alpha2)) return finish(alpha1, alpha2, "already supported");

    State s{alpha1, alpha2, out.before};
    const std::size_t cap = 4 * N + 16;
    auto note = [&](const std::string& pass, std::size_t moves) {
        out.log.push_back(pass + ": " + std::to_string(moves) + " moves, score " + s.score.to_string());
    };

    note("median", median_pass(inst, s, cap));
    const std::pair<const char*, DefectTest> passes[] = {
        {"middle", middle_defect}, {"ladder", ladder_defect}, {"corner", corner_defect}, {"support", support_defect}};
    for (std::size_t sweep = 0; sweep < 4 && !normal(inst, s.a1, s.a2); ++sweep) {
        std::size_t total = 0;
        for (const auto& [name, test] : passes) {
            const std::size_t moves = exchange_pass(inst, s, test, cap);
            note(name, moves);
            total += moves;
        }
        if (total == 0) break;
    }
    if (normal(inst, s.a1, s.a2) && s.score >= out.before) return finish(s.a1, s.a2, "exchange passes");

    // uniform encoding of the decoded cut, then single-flip improvement
    CutColoring chi = decode_solution(inst, s.a1);
    for (std::size_t step = 0;; ++step) {
        auto [e1, e2] = encode_cut(inst, chi);
        const Score sc = quartet_score(inst, e1, e2);
        out.log.push_back("uniform cut " + cut_label(chi) + ": score " + sc.to_string());
        if (sc >= out.before) return finish(std::move(e1), std::move(e2), "uniform encoding");
        const std::size_t c = cut_size(inst.graph, chi);
        bool flipped = false;
        for (std::size_t v = 0; v < chi.size() && !flipped; ++v) {
            chi[v] = !chi[v];
            if (cut_size(inst.graph, chi) > c) flipped = true;
            else chi[v] = !chi[v];
        }
        if (!flipped || step > N) break;
    }
    if (inst.graph.vertex_count() <= 20) {
        const auto [c, best] = max_cut_exhaustive(inst.graph);
        auto [e1, e2] = encode_cut(inst, best);
        const Score sc = quartet_score(inst, e1, e2);
        out.log.push_back("maximum cut " + std::to_string(c) + ": score " + sc.to_string());
        if (sc >= out.before) return finish(std::move(e1), std::move(e2), "maximum cut encoding");
    }
    throw NormalFormError("no supported solution reaches score " + out.before.to_string());
}

std::vector<TopologyScore> compare_topologies(const QuartetInstance& inst, std::size_t restarts, std::uint64_t seed) {
    const std::array<std::array<NodeId, 4>, 3> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    Assignment leaves(6);
    for (std::size_t i = 0; i < 4; ++i) leaves[i] = inst.pi[i];
    std::vector<TopologyScore> out;
    for (const auto& sp : splits) {
        const PhyloTree tree(6, {{sp[0], 4}, {sp[1], 4}, {4, 5}, {5, sp[2]}, {5, sp[3]}});
        SteinerOptions opt;
        Score best = steinerize(tree, leaves, Model::general, opt).score;
        opt.init = SteinerInit::random;
        for (std::size_t r = 0; r < restarts; ++r) {
            opt.seed = seed + r;
            best = std::max(best, steinerize(tree, leaves, Model::general, opt).score);
        }
        auto name = [](NodeId v) { return "pi" + std::to_string(v + 1); };
        out.push_back({"((" + name(sp[0]) + "," + name(sp[1]) + "),(" + name(sp[2]) + "," + name(sp[3]) + "))", best});
    }
    return out;
}

} // namespace bptk
