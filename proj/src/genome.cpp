#include "bptk/genome.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

namespace bptk {

std::string Score::to_string() const {
    std::string s = std::to_string(x2_ / 2);
    if (x2_ % 2 != 0) {
        if (x2_ < 0 && x2_ / 2 == 0) s = "-0";
        s += ".5";
    }
    return s;
}

std::string to_string(Model m) {
    switch (m) {
        case Model::general: return "general";
        case Model::circular: return "circular";
        case Model::linear: return "linear";
        case Model::multilinear: return "multilinear";
        case Model::mixed: return "mixed";
    }
    return "?";
}

std::optional<Model> parse_model(const std::string& name) {
    for (Model m : {Model::general, Model::circular, Model::linear, Model::multilinear, Model::mixed}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

bool allows_telomeres(Model m) { return m != Model::general && m != Model::circular; }

Extremity Extremity::telomere_of(const Extremity& x) {
    if (x.telomere_) throw GenomeError("a telomere cannot cap another telomere");
    return Extremity(x.index_, true);
}

std::string extremity_name(ExtremityIndex x) {
    return std::to_string(gene_of(x)) + (end_of(x) == End::head ? "h" : "t");
}

std::string Extremity::to_string() const {
    if (telomere_) return "T(" + extremity_name(index_) + ")";
    return extremity_name(index_);
}

GeneSetMismatch::GeneSetMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("gene sets differ: " + std::to_string(a) + " vs " + std::to_string(b) +
                            " genes") {}

Genome::Genome(std::size_t gene_count, Model model)
    : n_(gene_count), model_(model), mate_(2 * gene_count, kFree) {}

Conformance check_pairs(std::size_t gene_count,
                        std::span<const std::pair<Extremity, Extremity>> pairs) {
    Conformance report;
    std::vector<int> uses(2 * gene_count, 0);
    auto in_range = [&](const Extremity& e) {
        return e.gene() >= 1 && static_cast<std::size_t>(e.gene()) <= gene_count;
    };
    for (const auto& [a, b] : pairs) {
        if (!in_range(a) || !in_range(b)) {
            report.violations.push_back("extremity out of range in {" + a.to_string() + ", " +
                                        b.to_string() + "}");
            continue;
        }
        if (a.is_telomere() && b.is_telomere()) {
            report.violations.push_back("two telomeres paired: {" + a.to_string() + ", " +
                                        b.to_string() + "}");
            continue;
        }
        if (a.is_telomere() || b.is_telomere()) {
            const Extremity& tel = a.is_telomere() ? a : b;
            const Extremity& ext = a.is_telomere() ? b : a;
            if (tel.index() != ext.index()) {
                report.violations.push_back("wrong telomere pairing: " + tel.to_string() +
                                            " paired with " + ext.to_string());
                continue;
            }
            ++uses[static_cast<std::size_t>(ext.index())];
            continue;
        }
        if (a.index() == b.index()) {
            report.violations.push_back("extremity paired with itself: " + a.to_string());
            continue;
        }
        ++uses[static_cast<std::size_t>(a.index())];
        ++uses[static_cast<std::size_t>(b.index())];
    }
    for (std::size_t x = 0; x < uses.size(); ++x) {
        if (uses[x] > 1) {
            report.violations.push_back("extremity " + extremity_name(static_cast<ExtremityIndex>(x)) +
                                        " appears in " + std::to_string(uses[x]) + " adjacencies");
        }
    }
    return report;
}

Genome Genome::from_adjacencies(std::size_t gene_count,
                                std::span<const std::pair<Extremity, Extremity>> pairs, Model model) {
    Conformance report = check_pairs(gene_count, pairs);
    if (!report.ok()) throw GenomeError(report.violations.front());
    Genome g(gene_count, model);
    for (const auto& [a, b] : pairs) {
        if (a.is_telomere()) {
            g.mate_[static_cast<std::size_t>(b.index())] = kTelomere;
        } else if (b.is_telomere()) {
            g.mate_[static_cast<std::size_t>(a.index())] = kTelomere;
        } else {
            g.mate_[static_cast<std::size_t>(a.index())] = b.index();
            g.mate_[static_cast<std::size_t>(b.index())] = a.index();
        }
    }
    return g;
}

Genome Genome::from_adjacencies(std::size_t gene_count, std::span<const Adjacency> adjacencies,
                                Model model) {
    std::vector<std::pair<Extremity, Extremity>> pairs;
    pairs.reserve(adjacencies.size());
    for (const Adjacency& a : adjacencies) {
        Extremity x = Extremity::of_index(a.x);
        pairs.emplace_back(x, a.telomeric() ? Extremity::telomere_of(x) : Extremity::of_index(a.y));
    }
    return from_adjacencies(gene_count, pairs, model);
}

Genome Genome::from_chromosomes(std::size_t gene_count, std::span<const Chromosome> chromosomes,
                                Model model) {
    Genome g(gene_count, model);
    std::vector<char> seen(gene_count + 1, 0);
    auto entry = [](std::int32_t s) { return s > 0 ? tail_of(s) : head_of(-s); };
    auto exit = [](std::int32_t s) { return s > 0 ? head_of(s) : tail_of(-s); };
    for (const Chromosome& c : chromosomes) {
        if (c.genes.empty()) throw GenomeError("empty chromosome");
        for (std::int32_t s : c.genes) {
            std::int64_t gene = std::llabs(static_cast<long long>(s));
            if (s == 0 || gene > static_cast<std::int64_t>(gene_count)) {
                throw GenomeError("gene " + std::to_string(s) + " out of range 1.." +
                                  std::to_string(gene_count));
            }
            if (seen[static_cast<std::size_t>(gene)]) {
                throw GenomeError("duplicate gene " + std::to_string(gene));
            }
            seen[static_cast<std::size_t>(gene)] = 1;
        }
        for (std::size_t i = 0; i + 1 < c.genes.size(); ++i) {
            ExtremityIndex a = exit(c.genes[i]), b = entry(c.genes[i + 1]);
            g.mate_[static_cast<std::size_t>(a)] = b;
            g.mate_[static_cast<std::size_t>(b)] = a;
        }
        ExtremityIndex first = entry(c.genes.front()), last = exit(c.genes.back());
        if (c.kind == Chromosome::Kind::circular) {
            g.mate_[static_cast<std::size_t>(first)] = last;
            g.mate_[static_cast<std::size_t>(last)] = first;
        } else {
            g.mate_[static_cast<std::size_t>(first)] = kTelomere;
            g.mate_[static_cast<std::size_t>(last)] = kTelomere;
        }
    }
    return g;
}

Genome Genome::from_mates(std::vector<ExtremityIndex> mates, Model model) {
    if (mates.size() % 2 != 0) throw GenomeError("odd number of extremities");
    const auto size = static_cast<ExtremityIndex>(mates.size());
    for (ExtremityIndex x = 0; x < size; ++x) {
        ExtremityIndex y = mates[static_cast<std::size_t>(x)];
        if (y == kTelomere || y == kFree) continue;
        if (y < 0 || y >= size || y == x || mates[static_cast<std::size_t>(y)] != x) {
            throw GenomeError("mate array is not a matching at " + extremity_name(x));
        }
    }
    Genome g;
    g.n_ = mates.size() / 2;
    g.model_ = model;
    g.mate_ = std::move(mates);
    return g;
}

Genome Genome::with_model(Model m) const {
    Genome g = *this;
    g.model_ = m;
    return g;
}

std::vector<Adjacency> Genome::adjacencies() const {
    std::vector<Adjacency> out;
    out.reserve(n_ + 1);
    for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(mate_.size()); ++x) {
        ExtremityIndex y = mate(x);
        if (y == kTelomere) out.push_back({x, kTelomere});
        else if (y > x) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Genome::telomere_count() const {
    return static_cast<std::size_t>(std::count(mate_.begin(), mate_.end(), kTelomere));
}

namespace {

struct Shape {
    std::size_t linear = 0;
    std::size_t circular = 0;
};

// Components of genome + B; requires every extremity to be paired.
Shape chromosome_shape(const Genome& g) {
    Shape shape;
    const auto n = static_cast<std::int32_t>(g.gene_count());
    std::vector<char> visited(g.gene_count() + 1, 0);
    for (ExtremityIndex start = 0; start < 2 * n; ++start) {
        if (!g.is_telomeric(start) || visited[static_cast<std::size_t>(gene_of(start))]) continue;
        ExtremityIndex x = start;
        while (true) {
            visited[static_cast<std::size_t>(gene_of(x))] = 1;
            ExtremityIndex y = g.mate(other_end(x));
            if (y == kTelomere) break;
            x = y;
        }
        ++shape.linear;
    }
    for (std::int32_t gene = 1; gene <= n; ++gene) {
        if (visited[static_cast<std::size_t>(gene)]) continue;
        ExtremityIndex x = tail_of(gene);
        while (!visited[static_cast<std::size_t>(gene_of(x))]) {
            visited[static_cast<std::size_t>(gene_of(x))] = 1;
            x = g.mate(other_end(x));
        }
        ++shape.circular;
    }
    return shape;
}

std::uint64_t orientation_key(std::int32_t s) {
    return 2 * static_cast<std::uint64_t>(std::llabs(static_cast<long long>(s))) + (s < 0 ? 1 : 0);
}

std::vector<std::uint64_t> keys_of(const std::vector<std::int32_t>& genes) {
    std::vector<std::uint64_t> keys(genes.size());
    std::transform(genes.begin(), genes.end(), keys.begin(), orientation_key);
    return keys;
}

std::vector<std::int32_t> reverse_complement(const std::vector<std::int32_t>& genes) {
    std::vector<std::int32_t> out(genes.rbegin(), genes.rend());
    for (auto& s : out) s = -s;
    return out;
}

// start of the lexicographically least rotation (two-pointer method)
std::size_t least_rotation(const std::vector<std::uint64_t>& s) {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        std::uint64_t a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) i += k + 1;
        else j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

std::vector<std::int32_t> rotated(const std::vector<std::int32_t>& genes, std::size_t start) {
    std::vector<std::int32_t> out;
    out.reserve(genes.size());
    out.insert(out.end(), genes.begin() + static_cast<std::ptrdiff_t>(start), genes.end());
    out.insert(out.end(), genes.begin(), genes.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

std::vector<Chromosome> raw_chromosomes(const Genome& g) {
    const auto n = static_cast<std::int32_t>(g.gene_count());
    for (ExtremityIndex x = 0; x < 2 * n; ++x) {
        if (g.mate(x) == kFree) throw GenomeError("cannot decompose: " + extremity_name(x) + " is unpaired");
    }
    std::vector<Chromosome> out;
    std::vector<char> visited(g.gene_count() + 1, 0);
    auto signed_gene = [](ExtremityIndex entry) {
        return end_of(entry) == End::tail ? gene_of(entry) : -gene_of(entry);
    };
    for (ExtremityIndex start = 0; start < 2 * n; ++start) {
        if (!g.is_telomeric(start) || visited[static_cast<std::size_t>(gene_of(start))]) continue;
        Chromosome c{Chromosome::Kind::linear, {}};
        ExtremityIndex x = start;
        while (true) {
            visited[static_cast<std::size_t>(gene_of(x))] = 1;
            c.genes.push_back(signed_gene(x));
            ExtremityIndex y = g.mate(other_end(x));
            if (y == kTelomere) break;
            x = y;
        }
        out.push_back(std::move(c));
    }
    for (std::int32_t gene = 1; gene <= n; ++gene) {
        if (visited[static_cast<std::size_t>(gene)]) continue;
        Chromosome c{Chromosome::Kind::circular, {}};
        ExtremityIndex x = tail_of(gene);
        while (!visited[static_cast<std::size_t>(gene_of(x))]) {
            visited[static_cast<std::size_t>(gene_of(x))] = 1;
            c.genes.push_back(signed_gene(x));
            x = g.mate(other_end(x));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Chromosome> canonical_sorted(std::vector<Chromosome> chromosomes) {
    for (auto& c : chromosomes) c = canonical_chromosome(std::move(c));
    auto min_gene = [](const Chromosome& c) {
        std::int32_t m = 0;
        for (std::int32_t s : c.genes) {
            std::int32_t a = s < 0 ? -s : s;
            if (m == 0 || a < m) m = a;
        }
        return m;
    };
    std::sort(chromosomes.begin(), chromosomes.end(), [&](const Chromosome& a, const Chromosome& b) {
        auto ma = min_gene(a), mb = min_gene(b);
        if (ma != mb) return ma < mb;
        if (a.kind != b.kind) return a.kind < b.kind;
        return keys_of(a.genes) < keys_of(b.genes);
    });
    return chromosomes;
}

} // namespace

Chromosome canonical_chromosome(Chromosome c) {
    std::vector<std::int32_t> rev = reverse_complement(c.genes);
    if (c.kind == Chromosome::Kind::linear) {
        if (keys_of(rev) < keys_of(c.genes)) c.genes = std::move(rev);
        return c;
    }
    std::vector<std::int32_t> fwd = rotated(c.genes, least_rotation(keys_of(c.genes)));
    rev = rotated(rev, least_rotation(keys_of(rev)));
    c.genes = keys_of(rev) < keys_of(fwd) ? std::move(rev) : std::move(fwd);
    return c;
}

Conformance validate(const Genome& genome) { return validate(genome, genome.model()); }

Conformance validate(const Genome& genome, Model as_model) {
    Conformance report;
    if (genome.gene_count() == 0) {
        report.violations.push_back("gene set is empty");
        return report;
    }
    const auto size = static_cast<ExtremityIndex>(genome.extremity_count());
    for (ExtremityIndex x = 0; x < size; ++x) {
        if (genome.mate(x) == kFree) {
            report.violations.push_back("not a perfect matching: " + extremity_name(x) + " is unpaired");
        }
    }
    if (!report.ok()) return report;

    std::size_t telomeres = genome.telomere_count();
    if (!allows_telomeres(as_model) && telomeres > 0) {
        report.violations.push_back(to_string(as_model) + " model forbids telomeric adjacencies (" +
                                    std::to_string(telomeres) + " present)");
    }
    Shape shape = chromosome_shape(genome);
    switch (as_model) {
        case Model::general:
        case Model::mixed:
            break;
        case Model::circular:
            if (shape.circular + shape.linear != 1) {
                report.violations.push_back("circular model requires exactly one chromosome, found " +
                                            std::to_string(shape.circular + shape.linear));
            }
            break;
        case Model::linear:
            if (shape.linear == 0) report.violations.push_back("no linear chromosome");
            else if (shape.linear > 1)
                report.violations.push_back("linear model requires one chromosome, found " +
                                            std::to_string(shape.linear) + " linear chromosomes");
            if (shape.circular > 0)
                report.violations.push_back("linear model forbids circular chromosomes (" +
                                            std::to_string(shape.circular) + " present)");
            break;
        case Model::multilinear:
            if (shape.circular > 0)
                report.violations.push_back("multilinear model forbids circular chromosomes (" +
                                            std::to_string(shape.circular) + " present)");
            break;
    }
    return report;
}

std::vector<std::pair<Extremity, Extremity>> base_matching(std::size_t gene_count) {
    std::vector<std::pair<Extremity, Extremity>> b;
    b.reserve(gene_count);
    for (std::int32_t g = 1; g <= static_cast<std::int32_t>(gene_count); ++g) {
        b.emplace_back(Extremity::head(g), Extremity::tail(g));
    }
    return b;
}

std::vector<Chromosome> decompose(const Genome& genome) { return canonical_sorted(raw_chromosomes(genome)); }

Score similarity(const Genome& a, const Genome& b) {
    if (a.gene_count() != b.gene_count()) throw GeneSetMismatch(a.gene_count(), b.gene_count());
    std::int64_t x2 = 0;
    const auto size = static_cast<ExtremityIndex>(a.extremity_count());
    for (ExtremityIndex x = 0; x < size; ++x) {
        ExtremityIndex y = a.mate(x);
        if (y == kTelomere) {
            if (b.mate(x) == kTelomere) x2 += 1;
        } else if (y > x && b.mate(x) == y) {
            x2 += 2;
        }
    }
    return Score::from_half_units(x2);
}

Score distance(const Genome& a, const Genome& b) {
    return Score::whole(static_cast<std::int64_t>(a.gene_count())) - similarity(a, b);
}

DuplicatedGenome::DuplicatedGenome(Genome doubled) : doubled_(std::move(doubled)) {
    if (doubled_.gene_count() % 2 != 0) {
        throw GenomeError("a duplicated genome needs an even number of gene copies");
    }
}

std::vector<Chromosome> decompose(const DuplicatedGenome& delta) {
    std::vector<Chromosome> chromosomes = raw_chromosomes(delta.doubled());
    for (auto& c : chromosomes) {
        for (auto& s : c.genes) {
            std::int32_t d = s < 0 ? -s : s;
            std::int32_t base = (d + 1) / 2;
            s = s < 0 ? -base : base;
        }
    }
    return canonical_sorted(std::move(chromosomes));
}

DuplicatedGenome DuplicatedGenome::canonical() const {
    std::vector<Chromosome> chromosomes = decompose(*this);
    std::vector<char> seen(gene_count() + 1, 0);
    for (auto& c : chromosomes) {
        for (auto& s : c.genes) {
            std::int32_t g = s < 0 ? -s : s;
            int copy = seen[static_cast<std::size_t>(g)]++ ? 2 : 1;
            std::int32_t d = doubled_gene(g, copy);
            s = s < 0 ? -d : d;
        }
    }
    return DuplicatedGenome(Genome::from_chromosomes(doubled_.gene_count(), chromosomes, doubled_.model()));
}

DuplicatedGenome DuplicatedGenome::relabeled(const std::vector<bool>& swap) const {
    auto relabel = [&](ExtremityIndex dx) {
        if (dx < 0) return dx;
        std::size_t gene = static_cast<std::size_t>(gene_of(base_extremity(dx)));
        return gene < swap.size() && swap[gene] ? dx ^ 2 : dx;
    };
    std::vector<ExtremityIndex> mates(doubled_.extremity_count(), kFree);
    for (ExtremityIndex dx = 0; dx < static_cast<ExtremityIndex>(mates.size()); ++dx) {
        mates[static_cast<std::size_t>(relabel(dx))] = relabel(doubled_.mate(dx));
    }
    return DuplicatedGenome(Genome::from_mates(std::move(mates), doubled_.model()));
}

bool operator==(const DuplicatedGenome& a, const DuplicatedGenome& b) {
    if (a.gene_count() != b.gene_count()) return false;
    return a.canonical().doubled_ == b.canonical().doubled_;
}

DuplicatedGenome perfect_duplicate(const Genome& pi) {
    std::vector<ExtremityIndex> mates(2 * pi.extremity_count(), kFree);
    for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(pi.extremity_count()); ++x) {
        ExtremityIndex y = pi.mate(x);
        if (y == kFree) throw GenomeError("cannot duplicate: " + extremity_name(x) + " is unpaired");
        for (int copy = 1; copy <= 2; ++copy) {
            mates[static_cast<std::size_t>(doubled_extremity(x, copy))] =
                y == kTelomere ? kTelomere : doubled_extremity(y, copy);
        }
    }
    return DuplicatedGenome(Genome::from_mates(std::move(mates), pi.model()));
}

Score double_similarity(const Genome& pi, const DuplicatedGenome& delta) {
    if (pi.gene_count() != delta.gene_count()) throw GeneSetMismatch(pi.gene_count(), delta.gene_count());
    const Genome& d = delta.doubled();
    std::int64_t x2 = 0;
    for (ExtremityIndex x = 0; x < static_cast<ExtremityIndex>(pi.extremity_count()); ++x) {
        ExtremityIndex y = pi.mate(x);
        if (y == kFree) throw GenomeError(extremity_name(x) + " is unpaired");
        if (y == kTelomere) {
            for (int copy = 1; copy <= 2; ++copy) {
                if (d.mate(doubled_extremity(x, copy)) == kTelomere) x2 += 1;
            }
        } else if (y > x) {
            for (int copy = 1; copy <= 2; ++copy) {
                ExtremityIndex m = d.mate(doubled_extremity(x, copy));
                if (m >= 0 && base_extremity(m) == y) x2 += 2;
            }
        }
    }
    return Score::from_half_units(x2);
}

Score double_distance(const Genome& pi, const DuplicatedGenome& delta) {
    return Score::whole(2 * static_cast<std::int64_t>(pi.gene_count())) - double_similarity(pi, delta);
}

Score duplicated_similarity_brute_force(const DuplicatedGenome& a, const DuplicatedGenome& b) {
    if (a.gene_count() != b.gene_count()) throw GeneSetMismatch(a.gene_count(), b.gene_count());
    const std::size_t n = a.gene_count();
    if (n > 4) throw std::invalid_argument("brute-force duplicated similarity is limited to n <= 4");
    Score best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> swap(n + 1, false);
        for (std::size_t g = 1; g <= n; ++g) swap[g] = (mask >> (g - 1)) & 1u;
        best = std::max(best, similarity(a.doubled(), b.relabeled(swap).doubled()));
    }
    return best;
}

} // namespace bptk
