#include "bptk/halving.hpp"

#include <array>
#include <stdexcept>

namespace bptk {

namespace {

void require_solvable(const std::string& problem, Model m) {
    if (m != Model::general && m != Model::mixed) throw HardModelError(problem, m);
}

void require_valid(const DuplicatedGenome& delta) {
    auto report = validate(delta.doubled());
    if (!report.ok()) throw GenomeError("invalid duplicated genome: " + report.violations.front());
}

// Maximum matching of a unit-weight graph whose degrees are at most 2. Paths
// are matched alternately from their smaller endpoint; a cycle first loses
// its lexicographically largest edge.
class PathCycleMatcher {
public:
    explicit PathCycleMatcher(std::size_t n) : adj_(n, {-1, -1}), deg_(n, 0) {}

    void add_edge(std::int32_t u, std::int32_t v) {
        auto& du = deg_[static_cast<std::size_t>(u)];
        auto& dv = deg_[static_cast<std::size_t>(v)];
        if (du == 2 || dv == 2) throw std::logic_error("halving graph has a vertex of degree above 2");
        adj_[static_cast<std::size_t>(u)][du++] = v;
        adj_[static_cast<std::size_t>(v)][dv++] = u;
    }

    std::vector<std::int32_t> solve() {
        const auto n = static_cast<std::int32_t>(adj_.size());
        std::vector<std::int32_t> mate(adj_.size(), -1);
        std::vector<char> seen(adj_.size(), 0);
        std::vector<std::int32_t> walk;
        auto collect = [&](std::int32_t start, std::int32_t skip) {
            walk.clear();
            std::int32_t prev = skip, cur = start;
            while (cur != -1 && !seen[static_cast<std::size_t>(cur)]) {
                seen[static_cast<std::size_t>(cur)] = 1;
                walk.push_back(cur);
                const auto& a = adj_[static_cast<std::size_t>(cur)];
                std::int32_t next = a[0] != prev ? a[0] : a[1];
                if (deg_[static_cast<std::size_t>(cur)] == 1 && a[0] == prev) next = -1;
                prev = cur;
                cur = next;
            }
            for (std::size_t i = 0; i + 1 < walk.size(); i += 2) {
                mate[static_cast<std::size_t>(walk[i])] = walk[i + 1];
                mate[static_cast<std::size_t>(walk[i + 1])] = walk[i];
            }
        };
        for (std::int32_t v = 0; v < n; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && deg_[static_cast<std::size_t>(v)] < 2) collect(v, -1);
        }
        for (std::int32_t v = 0; v < n; ++v) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            // cycle through v: find its largest edge (a, b), a < b
            std::pair<std::int32_t, std::int32_t> worst{-1, -1};
            std::int32_t prev = adj_[static_cast<std::size_t>(v)][1], cur = v;
            do {
                const auto& a = adj_[static_cast<std::size_t>(cur)];
                std::int32_t next = a[0] != prev ? a[0] : a[1];
                worst = std::max(worst, std::pair(std::min(cur, next), std::max(cur, next)));
                prev = cur;
                cur = next;
            } while (cur != v);
            const auto [a, b] = worst;
            // walk from a away from b
            collect(a, b);
        }
        return mate;
    }

private:
    std::vector<std::array<std::int32_t, 2>> adj_;
    std::vector<std::uint8_t> deg_;
};

Genome complete(const std::vector<ExtremityIndex>& mates, Model model) {
    Matching m(mates.size());
    for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(mates.size()); ++x) {
        if (mates[static_cast<std::size_t>(x)] > x) m.add(x, mates[static_cast<std::size_t>(x)]);
    }
    // telomeric and free extremities both end up capped in the mixed model
    return complete_matching_to_genome(m, mates.size() / 2, model);
}

} // namespace

std::vector<AdjacencyCount> halving_counts(const DuplicatedGenome& delta) {
    const Genome& d = delta.doubled();
    std::vector<AdjacencyCount> counts;
    const auto size = static_cast<ExtremityIndex>(d.extremity_count());
    for (ExtremityIndex dx = 0; dx < size; ++dx) {
        ExtremityIndex m = d.mate(dx);
        ExtremityIndex x = base_extremity(dx);
        if (m == kTelomere) {
            counts.push_back({Adjacency::of(x, kTelomere), 1});
        } else if (m > dx && base_extremity(m) != x) {
            counts.push_back({Adjacency::of(x, base_extremity(m)), 1});
        }
    }
    std::sort(counts.begin(), counts.end(),
              [](const AdjacencyCount& a, const AdjacencyCount& b) { return a.adjacency < b.adjacency; });
    std::vector<AdjacencyCount> merged;
    for (const auto& c : counts) {
        if (!merged.empty() && merged.back().adjacency == c.adjacency) {
            merged.back().count += c.count;
        } else {
            merged.push_back(c);
        }
    }
    return merged;
}

HalvingResult halve(const DuplicatedGenome& delta, Model model) {
    require_solvable("genome halving", model);
    require_valid(delta);
    const std::size_t n = delta.gene_count();
    const auto two_n = static_cast<ExtremityIndex>(2 * n);
    const Genome& d = delta.doubled();

    // at most two candidate partners per base extremity, with multiplicity
    std::vector<std::array<ExtremityIndex, 2>> partner(2 * n, {kFree, kFree});
    for (ExtremityIndex x = 0; x < two_n; ++x) {
        for (int copy = 1; copy <= 2; ++copy) {
            ExtremityIndex m = d.mate(doubled_extremity(x, copy));
            ExtremityIndex y = m < 0 ? m : base_extremity(m);
            partner[static_cast<std::size_t>(x)][copy - 1] = y == x ? kFree : y;
        }
    }

    std::vector<ExtremityIndex> mates(2 * n, kFree);
    std::int64_t value = 0;
    for (ExtremityIndex x = 0; x < two_n; ++x) {
        const auto& p = partner[static_cast<std::size_t>(x)];
        if (p[0] != p[1] || p[0] == kFree) continue;
        if (p[0] == kTelomere) {
            if (model != Model::mixed) continue;
            mates[static_cast<std::size_t>(x)] = kTelomere;
            value += 2;
        } else if (p[0] > x) {
            mates[static_cast<std::size_t>(x)] = p[0];
            mates[static_cast<std::size_t>(p[0])] = x;
            value += 4;
        }
    }

    auto is_free = [&](ExtremityIndex v) { return mates[static_cast<std::size_t>(v)] == kFree; };
    const bool mixed = model == Model::mixed;
    PathCycleMatcher pc(mixed ? 4 * n : 2 * n);
    for (ExtremityIndex x = 0; x < two_n; ++x) {
        if (!is_free(x)) continue;
        for (ExtremityIndex y : partner[static_cast<std::size_t>(x)]) {
            if (y == kTelomere && mixed) {
                pc.add_edge(x, x + two_n);
            } else if (y > x && is_free(y)) {
                pc.add_edge(x, y);
                if (mixed) pc.add_edge(x + two_n, y + two_n);
            }
        }
    }
    std::vector<std::int32_t> residual = pc.solve();
    std::int64_t residual_weight = 0;
    for (std::size_t v = 0; v < residual.size(); ++v) residual_weight += residual[v] > static_cast<std::int32_t>(v) ? 2 : 0;

    if (!mixed) {
        for (ExtremityIndex x = 0; x < two_n; ++x) {
            if (residual[static_cast<std::size_t>(x)] >= 0) {
                mates[static_cast<std::size_t>(x)] = residual[static_cast<std::size_t>(x)];
            }
        }
    } else {
        std::int64_t own[2] = {0, 0};
        for (std::int32_t v = 0; v < 2 * two_n; ++v) {
            std::int32_t w = residual[static_cast<std::size_t>(v)];
            if (w > v && (v < two_n) == (w < two_n)) own[v < two_n ? 0 : 1] += 2;
        }
        const ExtremityIndex offset = own[1] > own[0] ? two_n : 0;
        for (ExtremityIndex x = 0; x < two_n; ++x) {
            std::int32_t w = residual[static_cast<std::size_t>(x + offset)];
            if (w < 0) continue;
            bool cross = (w < two_n) != (x + offset < two_n);
            mates[static_cast<std::size_t>(x)] = cross ? kTelomere : w - offset;
        }
    }

    Genome alpha = complete(mates, model);
    const std::int64_t dsim = double_similarity(alpha, delta).half_units();
    if ((mixed ? 2 * dsim : dsim) != (mixed ? 2 * value : value) + residual_weight) {
        throw std::logic_error("halving genome does not attain the matching weight");
    }
    return {alpha, double_distance(alpha, delta)};
}

GuidedHalvingResult guided_halve(const DuplicatedGenome& delta, const Genome& rho, Model model) {
    require_solvable("guided genome halving", model);
    require_valid(delta);
    if (rho.gene_count() != delta.gene_count()) throw GeneSetMismatch(delta.gene_count(), rho.gene_count());
    auto report = validate(rho);
    if (!report.ok()) throw GenomeError("invalid guide genome: " + report.violations.front());

    std::vector<AdjacencyCount> counts = halving_counts(delta);
    for (const auto& a : rho.adjacencies()) counts.push_back({a, 1});
    std::sort(counts.begin(), counts.end(),
              [](const AdjacencyCount& a, const AdjacencyCount& b) { return a.adjacency < b.adjacency; });
    std::vector<AdjacencyCount> merged;
    for (const auto& c : counts) {
        if (!merged.empty() && merged.back().adjacency == c.adjacency) {
            merged.back().count += c.count;
        } else {
            merged.push_back(c);
        }
    }
    MedianGraph mg = median_graph_from_counts(delta.gene_count(), merged, model);
    Genome alpha = solve_median_graph(mg, true);
    Score dd = double_distance(alpha, delta), d = distance(alpha, rho);
    return {alpha, dd, d, dd + d};
}

namespace {

Model enumeration_model(Model m) {
    return m == Model::general || m == Model::circular ? Model::general : Model::mixed;
}

void require_oracle_size(std::size_t n) {
    if (n > kBruteForceHalvingLimit) {
        throw OracleSizeError("brute-force halving is limited to n <= " + std::to_string(kBruteForceHalvingLimit) +
                              ", got n = " + std::to_string(n));
    }
}

} // namespace

HalvingResult brute_force_halve(const DuplicatedGenome& delta, Model model) {
    require_oracle_size(delta.gene_count());
    HalvingResult best{Genome(), Score::from_half_units(-1)};
    bool found = false;
    for_each_genome(delta.gene_count(), enumeration_model(model), [&](const std::vector<ExtremityIndex>& mates) {
        Genome alpha = Genome::from_mates(mates, model);
        if (model != Model::general && model != Model::mixed && !validate(alpha).ok()) return;
        Score dd = double_distance(alpha, delta);
        if (!found || dd < best.dd) best = {alpha, dd};
        found = true;
    });
    return best;
}

GuidedHalvingResult brute_force_guided_halve(const DuplicatedGenome& delta, const Genome& rho, Model model) {
    require_oracle_size(delta.gene_count());
    if (rho.gene_count() != delta.gene_count()) throw GeneSetMismatch(delta.gene_count(), rho.gene_count());
    GuidedHalvingResult best;
    bool found = false;
    for_each_genome(delta.gene_count(), enumeration_model(model), [&](const std::vector<ExtremityIndex>& mates) {
        Genome alpha = Genome::from_mates(mates, model);
        if (model != Model::general && model != Model::mixed && !validate(alpha).ok()) return;
        Score dd = double_distance(alpha, delta), d = distance(alpha, rho);
        if (!found || dd + d < best.total) best = {alpha, dd, d, dd + d};
        found = true;
    });
    return best;
}

} // namespace bptk
