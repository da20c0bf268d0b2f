#include "bptk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace bptk {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

Model NamedGenome::model() const { return duplicated() ? dup().model() : ordinary().model(); }

namespace {

constexpr std::int64_t kMaxGene = std::int64_t{1} << 26;

struct Token {
    std::string text;
    std::size_t line;
};

// Whitespace-separated tokens with '#' comments removed.
std::vector<std::pair<std::size_t, std::string>> split_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.emplace_back(number, std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string> words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') return std::nullopt;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

struct RawGenome {
    std::string name;
    std::size_t line;
    std::vector<Chromosome> chromosomes;
    // line of every gene occurrence, in order
    std::vector<std::size_t> gene_lines;
};

NamedGenome build(const RawGenome& raw, std::optional<Model> model_override) {
    if (raw.chromosomes.empty()) throw ParseError(raw.line, "genome '" + raw.name + "' has no chromosomes");
    std::int64_t n = 0;
    for (const auto& c : raw.chromosomes)
        for (auto s : c.genes) n = std::max<std::int64_t>(n, s < 0 ? -static_cast<std::int64_t>(s) : s);

    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    bool singles = false;
    std::size_t k = 0;
    for (const auto& c : raw.chromosomes)
        for (auto s : c.genes) {
            const auto g = static_cast<std::size_t>(s < 0 ? -s : s);
            if (++count[g] > 2) throw ParseError(raw.gene_lines[k], "duplicate gene " + std::to_string(g));
            ++k;
        }
    for (std::size_t g = 1; g < count.size(); ++g) {
        if (count[g] == 0) throw ParseError(raw.line, "genome '" + raw.name + "' is missing gene " + std::to_string(g));
        singles = singles || count[g] == 1;
    }
    if (singles) {
        std::vector<int> seen(count.size(), 0);
        k = 0;
        for (const auto& c : raw.chromosomes)
            for (auto s : c.genes) {
                const auto g = static_cast<std::size_t>(s < 0 ? -s : s);
                if (seen[g]++) throw ParseError(raw.gene_lines[k], "duplicate gene " + std::to_string(g));
                ++k;
            }
    }

    const Model inferred = infer_model(raw.chromosomes);
    NamedGenome out;
    out.name = raw.name;
    out.line = raw.line;
    Genome base;
    if (singles) {
        base = Genome::from_chromosomes(static_cast<std::size_t>(n), raw.chromosomes, inferred);
    } else {
        std::vector<char> seen(count.size(), 0);
        std::vector<Chromosome> doubled = raw.chromosomes;
        for (auto& c : doubled)
            for (auto& s : c.genes) {
                const auto g = static_cast<std::int32_t>(s < 0 ? -s : s);
                const int copy = seen[static_cast<std::size_t>(g)]++ ? 2 : 1;
                s = (s < 0 ? -1 : 1) * doubled_gene(g, copy);
            }
        base = Genome::from_chromosomes(2 * static_cast<std::size_t>(n), doubled, inferred);
    }
    if (model_override) {
        base = base.with_model(*model_override);
        const auto conf = validate(base);
        if (!conf.ok())
            throw ParseError(raw.line, "genome '" + raw.name + "' is not a valid " + to_string(*model_override) +
                                           " genome: " + conf.violations.front());
    }
    if (singles) out.genome = std::move(base);
    else out.genome = DuplicatedGenome(std::move(base));
    return out;
}

std::string chromosome_line(const Chromosome& c) {
    std::string s;
    for (auto g : c.genes) s += std::to_string(g) + ' ';
    s += c.kind == Chromosome::Kind::circular ? '@' : '$';
    return s;
}

std::string lines_of(const std::vector<Chromosome>& chromosomes) {
    std::string out;
    for (const auto& c : chromosomes) out += chromosome_line(c) + '\n';
    return out;
}

struct GraphText {
    std::size_t vertices = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::size_t> lines;
};

GraphText read_pairs(std::string_view text) {
    std::vector<Token> tokens;
    for (auto& [number, line] : split_lines(text))
        for (auto& w : words(line)) tokens.push_back({w, number});
    auto number_at = [&](std::size_t i) {
        if (i >= tokens.size()) throw ParseError(tokens.empty() ? 1 : tokens.back().line, "unexpected end of graph");
        auto v = parse_int(tokens[i].text);
        if (!v || *v < 0 || *v > std::numeric_limits<int>::max())
            throw ParseError(tokens[i].line, "unknown token '" + tokens[i].text + "'");
        return *v;
    };
    GraphText g;
    g.vertices = static_cast<std::size_t>(number_at(0));
    const auto edges = static_cast<std::size_t>(number_at(1));
    for (std::size_t e = 0; e < edges; ++e) {
        const std::size_t i = 2 + 2 * e;
        const auto u = number_at(i), v = number_at(i + 1);
        for (auto x : {u, v})
            if (x < 1 || static_cast<std::size_t>(x) > g.vertices)
                throw ParseError(tokens[i].line, "vertex " + std::to_string(x) + " out of range 1.." +
                                                     std::to_string(g.vertices));
        if (u == v) throw ParseError(tokens[i].line, "self-loop at vertex " + std::to_string(u));
        g.pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        g.lines.push_back(tokens[i].line);
    }
    if (tokens.size() > 2 + 2 * edges) throw ParseError(tokens[2 + 2 * edges].line, "trailing data after the edge list");
    return g;
}

} // namespace

Model infer_model(const std::vector<Chromosome>& chromosomes) {
    const auto linear = static_cast<std::size_t>(std::count_if(
        chromosomes.begin(), chromosomes.end(), [](const Chromosome& c) { return c.kind == Chromosome::Kind::linear; }));
    if (linear == 0) return chromosomes.size() == 1 ? Model::circular : Model::general;
    if (linear == chromosomes.size()) return linear == 1 ? Model::linear : Model::multilinear;
    return Model::mixed;
}

std::vector<NamedGenome> parse_genomes(std::string_view text, std::optional<Model> model_override) {
    std::vector<NamedGenome> out;
    std::set<std::string> names;
    std::optional<RawGenome> cur;
    std::vector<std::int32_t> pending;
    std::size_t pending_line = 0;

    auto finish = [&]() {
        if (!cur) return;
        if (!pending.empty()) throw ParseError(pending_line, "unterminated chromosome");
        out.push_back(build(*cur, model_override));
        cur.reset();
    };

    for (auto& [number, raw_line] : split_lines(text)) {
        const std::string line = trim(raw_line);
        if (line.empty()) continue;
        if (line.front() == '>') {
            finish();
            RawGenome g;
            g.name = trim(line.substr(1));
            g.line = number;
            if (g.name.empty()) throw ParseError(number, "empty genome name");
            if (!names.insert(g.name).second) throw ParseError(number, "duplicate genome name '" + g.name + "'");
            cur = std::move(g);
            continue;
        }
        if (!cur) throw ParseError(number, "chromosome before any '>' header");
        for (std::string w : words(line)) {
            char term = 0;
            if (w.size() > 1 && (w.back() == '@' || w.back() == '$')) {
                term = w.back();
                w.pop_back();
            } else if (w == "@" || w == "$") {
                term = w[0];
                w.clear();
            }
            if (!w.empty()) {
                auto v = parse_int(w);
                if (!v) throw ParseError(number, "unknown token '" + w + "'");
                if (*v == 0 || *v > kMaxGene || *v < -kMaxGene)
                    throw ParseError(number, "gene " + w + " out of range");
                if (pending.empty()) pending_line = number;
                pending.push_back(static_cast<std::int32_t>(*v));
                cur->gene_lines.push_back(number);
            }
            if (term) {
                if (pending.empty()) throw ParseError(number, "empty chromosome");
                cur->chromosomes.push_back(
                    {term == '@' ? Chromosome::Kind::circular : Chromosome::Kind::linear, std::move(pending)});
                pending.clear();
            }
        }
    }
    finish();
    return out;
}

std::string format_chromosomes(const Genome& g) { return lines_of(decompose(g)); }

std::string format_chromosomes(const DuplicatedGenome& g) { return lines_of(decompose(g)); }

std::string serialize_genome(const NamedGenome& g) {
    return '>' + g.name + '\n' + (g.duplicated() ? format_chromosomes(g.dup()) : format_chromosomes(g.ordinary()));
}

std::string serialize_genomes(const std::vector<NamedGenome>& genomes) {
    std::string out;
    for (const auto& g : genomes) out += serialize_genome(g);
    return out;
}

const NamedGenome& find_genome(const std::vector<NamedGenome>& genomes, const std::string& name) {
    for (const auto& g : genomes)
        if (g.name == name) return g;
    throw ParseError(0, "no genome named '" + name + "'");
}

SimpleGraph parse_graph(std::string_view text) {
    GraphText g = read_pairs(text);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < g.pairs.size(); ++i) {
        auto [u, v] = g.pairs[i];
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(g.lines[i], "repeated edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
    return SimpleGraph(g.vertices, std::move(g.pairs));
}

Digraph parse_digraph(std::string_view text) {
    GraphText g = read_pairs(text);
    return Digraph(g.vertices, std::move(g.pairs));
}

std::string serialize_graph(const SimpleGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + ' ' + std::to_string(v + 1) + '\n';
    return out;
}

std::string serialize_digraph(const Digraph& d) {
    std::string out = std::to_string(d.vertex_count()) + ' ' + std::to_string(d.arcs().size()) + '\n';
    for (auto [u, v] : d.arcs()) out += std::to_string(u + 1) + ' ' + std::to_string(v + 1) + '\n';
    return out;
}

PhyloTree parse_newick(std::string_view text) {
    std::string s;
    std::vector<std::size_t> line_of;
    {
        std::size_t line = 1;
        for (char ch : text) {
            if (ch == '\n') ++line;
            if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
            s += ch;
            line_of.push_back(line);
        }
    }
    std::size_t pos = 0;
    auto line_at = [&](std::size_t p) { return line_of.empty() ? 1 : line_of[std::min(p, line_of.size() - 1)]; };
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(line_at(pos), msg); };

    std::vector<std::string> names;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto label = [&]() {
        std::string name;
        while (pos < s.size() && std::string_view("(),:;").find(s[pos]) == std::string_view::npos) name += s[pos++];
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            while (pos < s.size() && std::string_view("(),;").find(s[pos]) == std::string_view::npos) ++pos;
        }
        return name;
    };
    std::function<NodeId()> node = [&]() -> NodeId {
        const auto id = static_cast<NodeId>(names.size());
        names.emplace_back();
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            for (;;) {
                const NodeId child = node();
                edges.emplace_back(id, child);
                if (pos >= s.size()) throw fail("unbalanced parentheses");
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] != ')') throw fail(std::string("unexpected '") + s[pos] + "'");
                ++pos;
                break;
            }
            names[static_cast<std::size_t>(id)] = label();
        } else {
            names[static_cast<std::size_t>(id)] = label();
            if (names[static_cast<std::size_t>(id)].empty()) throw fail("leaf without a name");
        }
        return id;
    };
    if (s.empty()) throw ParseError(1, "empty tree");
    node();
    if (pos >= s.size() || s[pos] != ';') throw fail("missing ';' at end of tree");
    ++pos;
    if (pos != s.size()) throw fail("trailing data after ';'");

    PhyloTree tree(names.size(), edges, names);
    std::set<std::string> seen;
    for (NodeId v : tree.leaves())
        if (!seen.insert(tree.name(v)).second) throw ParseError(1, "duplicate leaf name '" + tree.name(v) + "'");
    return tree;
}

std::string serialize_newick(const PhyloTree& tree, NodeId root) {
    std::function<std::string(NodeId, NodeId)> rec = [&](NodeId v, NodeId parent) {
        std::string children;
        for (NodeId w : tree.neighbours(v)) {
            if (w == parent) continue;
            if (!children.empty()) children += ',';
            children += rec(w, v);
        }
        return (children.empty() ? "" : "(" + children + ")") + tree.name(v);
    };
    return rec(root, -1) + ";";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace bptk
