#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bptk/score.hpp"

namespace bptk {

/*
 * Genomes are perfect matchings over gene extremities.
 *
 * Gene g (1-based) owns two extremities. Internally they are array indices
 *   tail(g) = 2(g-1),  head(g) = 2(g-1) + 1,
 * so the base matching B pairs index 2i with 2i+1. A telomere T_x can only
 * ever be paired with its own extremity x, so a telomeric adjacency {x, T_x}
 * is stored as mate[x] == kTelomere instead of giving telomeres indices.
 */

enum class Model { general, circular, linear, multilinear, mixed };

std::string to_string(Model m);
std::optional<Model> parse_model(const std::string& name);
// general and circular genomes have no telomeres
bool allows_telomeres(Model m);

enum class End : std::uint8_t { tail = 0, head = 1 };

using ExtremityIndex = std::int32_t;

inline constexpr ExtremityIndex kTelomere = -1;
inline constexpr ExtremityIndex kFree = -2;

inline constexpr ExtremityIndex tail_of(std::int32_t gene) { return 2 * (gene - 1); }
inline constexpr ExtremityIndex head_of(std::int32_t gene) { return 2 * (gene - 1) + 1; }
inline constexpr std::int32_t gene_of(ExtremityIndex x) { return x / 2 + 1; }
inline constexpr End end_of(ExtremityIndex x) { return (x & 1) ? End::head : End::tail; }
inline constexpr ExtremityIndex other_end(ExtremityIndex x) { return x ^ 1; }

// Head(g), Tail(g) or Telomere(of a head or tail). A telomere of a telomere
// cannot be formed.
class Extremity {
public:
    static Extremity head(std::int32_t gene) { return Extremity(head_of(gene), false); }
    static Extremity tail(std::int32_t gene) { return Extremity(tail_of(gene), false); }
    static Extremity of_index(ExtremityIndex x) { return Extremity(x, false); }
    static Extremity telomere_of(const Extremity& x);

    bool is_telomere() const { return telomere_; }
    // for a telomere, the extremity it caps
    ExtremityIndex index() const { return index_; }
    std::int32_t gene() const { return gene_of(index_); }
    End end() const { return end_of(index_); }

    std::string to_string() const;
    friend bool operator==(const Extremity&, const Extremity&) = default;

private:
    Extremity(ExtremityIndex x, bool telomere) : index_(x), telomere_(telomere) {}
    ExtremityIndex index_;
    bool telomere_;
};

std::string extremity_name(ExtremityIndex x);

// An adjacency {x, y} with x < y, or a telomeric adjacency {x, T_x} with
// y == kTelomere.
struct Adjacency {
    ExtremityIndex x;
    ExtremityIndex y;

    static Adjacency of(ExtremityIndex a, ExtremityIndex b) {
        if (b == kTelomere || a < b) return {a, b};
        return {b, a};
    }
    bool telomeric() const { return y == kTelomere; }
    friend auto operator<=>(const Adjacency&, const Adjacency&) = default;
};

class GenomeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GeneSetMismatch : public std::invalid_argument {
public:
    GeneSetMismatch(std::size_t a, std::size_t b);
};

struct Chromosome {
    enum class Kind { circular, linear };
    Kind kind;
    // signed gene identifiers; the sign is the orientation
    std::vector<std::int32_t> genes;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

class Genome {
public:
    Genome() = default;
    // all extremities unpaired
    Genome(std::size_t gene_count, Model model);

    // Throws GenomeError when the pairs are not structurally a matching
    // (repeated extremity, gene out of range, telomere paired with a foreign
    // extremity). Missing extremities are allowed and reported by validate().
    static Genome from_adjacencies(std::size_t gene_count,
                                   std::span<const std::pair<Extremity, Extremity>> pairs,
                                   Model model);
    static Genome from_adjacencies(std::size_t gene_count, std::span<const Adjacency> adjacencies,
                                   Model model);
    static Genome from_chromosomes(std::size_t gene_count, std::span<const Chromosome> chromosomes,
                                   Model model);
    // mate[x] is another extremity, kTelomere or kFree
    static Genome from_mates(std::vector<ExtremityIndex> mates, Model model);

    std::size_t gene_count() const { return n_; }
    std::size_t extremity_count() const { return mate_.size(); }
    Model model() const { return model_; }
    Genome with_model(Model m) const;

    ExtremityIndex mate(ExtremityIndex x) const { return mate_[static_cast<std::size_t>(x)]; }
    bool is_telomeric(ExtremityIndex x) const { return mate(x) == kTelomere; }
    bool has_adjacency(ExtremityIndex x, ExtremityIndex y) const { return mate(x) == y; }
    std::span<const ExtremityIndex> mates() const { return mate_; }

    // sorted; each adjacency listed once
    std::vector<Adjacency> adjacencies() const;
    std::size_t telomere_count() const;

    friend bool operator==(const Genome& a, const Genome& b) {
        return a.n_ == b.n_ && a.mate_ == b.mate_;
    }

private:
    std::size_t n_ = 0;
    Model model_ = Model::general;
    std::vector<ExtremityIndex> mate_;
};

struct Conformance {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Structural check of a raw pair list (used before a Genome can exist).
Conformance check_pairs(std::size_t gene_count,
                        std::span<const std::pair<Extremity, Extremity>> pairs);

// Does the genome satisfy its model tag?
Conformance validate(const Genome& genome);
Conformance validate(const Genome& genome, Model as_model);

// { {Head(g), Tail(g)} : g = 1..n }
std::vector<std::pair<Extremity, Extremity>> base_matching(std::size_t gene_count);

// Chromosomes in canonical orientation/rotation, ordered by their smallest
// gene. Precondition: every extremity is paired.
std::vector<Chromosome> decompose(const Genome& genome);

// Canonical form of a single chromosome: the rotation/reflection whose
// sequence of (|g|, sign) keys is lexicographically least, positive before
// negative.
Chromosome canonical_chromosome(Chromosome c);

Score similarity(const Genome& a, const Genome& b);
Score distance(const Genome& a, const Genome& b);

/*
 * Duplicated genomes live over the doubled gene universe: copy c in {1, 2}
 * of gene g is gene 2(g-1)+c of the underlying ordinary genome. Copy labels
 * carry no meaning, so equality is equality of the equivalence class.
 */
inline constexpr std::int32_t doubled_gene(std::int32_t gene, int copy) { return 2 * (gene - 1) + copy; }
inline constexpr ExtremityIndex doubled_extremity(ExtremityIndex x, int copy) {
    return 4 * (x / 2) + 2 * (copy - 1) + (x & 1);
}
inline constexpr ExtremityIndex base_extremity(ExtremityIndex dx) { return 2 * (dx / 4) + (dx & 1); }
inline constexpr int copy_of(ExtremityIndex dx) { return ((dx >> 1) & 1) + 1; }

class DuplicatedGenome {
public:
    DuplicatedGenome() = default;
    // doubled.gene_count() must be even
    explicit DuplicatedGenome(Genome doubled);

    std::size_t gene_count() const { return doubled_.gene_count() / 2; }
    Model model() const { return doubled_.model(); }
    const Genome& doubled() const { return doubled_; }

    // Representative with copies labeled by order of appearance in the
    // canonical chromosome listing.
    DuplicatedGenome canonical() const;
    // Swap the copy labels of every gene whose bit is set.
    DuplicatedGenome relabeled(const std::vector<bool>& swap) const;

    friend bool operator==(const DuplicatedGenome& a, const DuplicatedGenome& b);

private:
    Genome doubled_;
};

// chromosomes over base genes (each gene appears twice)
std::vector<Chromosome> decompose(const DuplicatedGenome& delta);

// Two copies of every chromosome.
DuplicatedGenome perfect_duplicate(const Genome& pi);

// Adjacency xy of pi counts 2 when present twice in delta, 1 when once;
// telomeric adjacencies at half weight.
Score double_similarity(const Genome& pi, const DuplicatedGenome& delta);
Score double_distance(const Genome& pi, const DuplicatedGenome& delta);

// Best similarity between labeled representatives of two duplicated genomes,
// by trying all 2^n relabelings. Brute force, n <= 4.
Score duplicated_similarity_brute_force(const DuplicatedGenome& a, const DuplicatedGenome& b);

} // namespace bptk
