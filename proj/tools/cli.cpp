#include "bptk/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "bptk/halving.hpp"
#include "bptk/hamiltonian_halving.hpp"
#include "bptk/io.hpp"
#include "bptk/matching.hpp"
#include "bptk/matching_median.hpp"
#include "bptk/median.hpp"
#include "bptk/phylogeny.hpp"
#include "bptk/quartet.hpp"

namespace bptk::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Everything a command reports; rendered as text or as JSON.
struct Report {
    std::string command;
    Json inputs = Json::object();
    std::optional<Score> score;
    std::vector<std::pair<std::string, std::string>> genomes;
    Json diagnostics = Json::object();
    std::string text;
    int exit_code = kOk;
};

Report report_for(std::string command) {
    Report r;
    r.command = std::move(command);
    return r;
}

Json score_json(Score s) {
    return static_cast<double>(s.half_units()) / 2.0;
}

std::string to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["score_x2"] = r.score ? Json(r.score->half_units()) : Json();
    j["score"] = r.score ? score_json(*r.score) : Json();
    Json genomes = Json::object();
    for (const auto& [name, text] : r.genomes) genomes[name] = text;
    j["genomes"] = genomes;
    j["diagnostics"] = r.diagnostics;
    return j.dump(2) + "\n";
}

std::string genome_block(const std::string& name, const std::string& chromosomes) {
    return ">" + name + "\n" + chromosomes;
}

Model model_arg(const std::string& name) {
    auto m = parse_model(name);
    if (!m) throw ParseError(0, "unknown model '" + name + "'");
    return *m;
}

std::vector<NamedGenome> load_genomes(const std::string& path) { return parse_genomes(read_file(path)); }

const Genome& ordinary_genome(const std::vector<NamedGenome>& all, const std::string& name) {
    const auto& g = find_genome(all, name);
    if (g.duplicated()) throw ParseError(g.line, "genome '" + name + "' is duplicated; an ordinary genome is needed");
    return g.ordinary();
}

const DuplicatedGenome& duplicated_genome(const std::vector<NamedGenome>& all, const std::string& name) {
    const auto& g = find_genome(all, name);
    if (!g.duplicated()) throw ParseError(g.line, "genome '" + name + "' is not duplicated");
    return g.dup();
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Genome> pick_genomes(const std::vector<NamedGenome>& all, const std::string& names, Json& inputs) {
    std::vector<Genome> out;
    Json used = Json::array();
    if (names.empty()) {
        for (const auto& g : all)
            if (!g.duplicated()) {
                out.push_back(g.ordinary());
                used.push_back(g.name);
            }
    } else {
        for (const auto& n : split_names(names)) {
            out.push_back(ordinary_genome(all, n));
            used.push_back(n);
        }
    }
    inputs["genomes"] = used;
    return out;
}

std::string coloring_text(const CutColoring& c) {
    std::string s;
    for (bool g : c) s += g ? 'G' : 'R';
    return s;
}

// --- commands ---------------------------------------------------------------

struct Args {
    std::string file, file2, a, b, model, names, dup, guide, init = "nearest-leaf", out, drop, solution;
    std::uint64_t seed = 0;
    std::size_t max_rounds = 1000, samples = 1000;
    bool linear = false, exhaustive = false, alternatives = false;
};

Report cmd_dist(const Args& a) {
    Report r = report_for("dist");
    auto all = load_genomes(a.file);
    const Genome& x = ordinary_genome(all, a.a);
    const Genome& y = ordinary_genome(all, a.b);
    Genome gx = x, gy = y;
    if (!a.model.empty()) {
        const Model m = model_arg(a.model);
        gx = x.with_model(m);
        gy = y.with_model(m);
        for (const Genome* g : {&gx, &gy})
            if (auto c = validate(*g); !c.ok()) throw GenomeError(c.violations.front());
    }
    const Score sim = similarity(gx, gy), d = distance(gx, gy);
    r.inputs = {{"file", a.file}, {"a", a.a}, {"b", a.b}};
    r.score = sim;
    r.diagnostics = {{"n", x.gene_count()}, {"distance_x2", d.half_units()}, {"distance", score_json(d)}};
    r.text = "n " + std::to_string(x.gene_count()) + "\nsim " + sim.to_string() + "\nd " + d.to_string() + "\n";
    return r;
}

Report median_report(const std::string& command, const Args& a, bool oracle) {
    Report r = report_for(command);
    auto all = load_genomes(a.file);
    r.inputs["file"] = a.file;
    auto genomes = pick_genomes(all, a.names, r.inputs);
    const Model m = model_arg(a.model.empty() ? "general" : a.model);
    r.inputs["model"] = to_string(m);
    const auto res = oracle ? brute_force_median(genomes, m) : median(genomes, m);
    const auto chromosomes = format_chromosomes(res.alpha);
    r.score = res.score;
    const auto n = static_cast<std::int64_t>(genomes.front().gene_count());
    const Score total_distance = Score::whole(n * static_cast<std::int64_t>(genomes.size())) - res.score;
    r.diagnostics = {{"k", genomes.size()}, {"n", n}, {"total_distance", score_json(total_distance)}};
    r.genomes.emplace_back("median", chromosomes);
    r.text = "score " + res.score.to_string() + "\n" + genome_block("median", chromosomes);
    return r;
}

Report halving_report(const std::string& command, const Args& a, bool guided, bool oracle) {
    Report r = report_for(command);
    auto all = load_genomes(a.file);
    const auto& delta = duplicated_genome(all, a.dup);
    const Model m = model_arg(a.model.empty() ? "general" : a.model);
    r.inputs = {{"file", a.file}, {"dup", a.dup}, {"model", to_string(m)}};
    if (guided) {
        const Genome& rho = ordinary_genome(all, a.guide);
        r.inputs["guide"] = a.guide;
        const auto res = oracle ? brute_force_guided_halve(delta, rho, m) : guided_halve(delta, rho, m);
        const auto chromosomes = format_chromosomes(res.alpha);
        r.score = res.total;
        r.diagnostics = {{"n", delta.gene_count()}, {"dd", score_json(res.dd)}, {"d", score_json(res.d)}};
        r.genomes.emplace_back("halved", chromosomes);
        r.text = "total " + res.total.to_string() + "\ndd " + res.dd.to_string() + "\nd " + res.d.to_string() + "\n" +
                 genome_block("halved", chromosomes);
    } else {
        const auto res = oracle ? brute_force_halve(delta, m) : halve(delta, m);
        const auto chromosomes = format_chromosomes(res.alpha);
        r.score = res.dd;
        r.diagnostics = {{"n", delta.gene_count()},
                         {"double_similarity", score_json(double_similarity(res.alpha, delta))}};
        r.genomes.emplace_back("halved", chromosomes);
        r.text = "dd " + res.dd.to_string() + "\n" + genome_block("halved", chromosomes);
    }
    return r;
}

Report cmd_phylogeny(const Args& a) {
    Report r = report_for("phylogeny");
    auto all = load_genomes(a.file);
    const PhyloTree tree = parse_newick(read_file(a.file2));
    const Model m = model_arg(a.model.empty() ? "general" : a.model);
    SteinerOptions opt;
    if (a.init == "nearest-leaf") opt.init = SteinerInit::nearest_leaf;
    else if (a.init == "random") opt.init = SteinerInit::random;
    else throw ParseError(0, "unknown init '" + a.init + "'");
    opt.seed = a.seed;
    opt.max_rounds = a.max_rounds;
    Assignment leaves(tree.node_count());
    for (NodeId v : tree.leaves()) {
        const auto& g = find_genome(all, tree.name(v));
        leaves[static_cast<std::size_t>(v)] = ordinary_genome(all, g.name);
    }
    const auto res = steinerize(tree, leaves, m, opt);
    r.inputs = {{"file", a.file}, {"tree", a.file2}, {"model", to_string(m)}, {"init", a.init}, {"seed", a.seed},
                {"max_rounds", a.max_rounds}};
    r.score = res.score;
    Json history = Json::array();
    for (Score s : res.history) history.push_back(s.half_units());
    r.diagnostics = {{"rounds", res.rounds}, {"history_x2", history}};
    r.text = "score " + res.score.to_string() + "\nrounds " + std::to_string(res.rounds) + "\n";
    for (NodeId v : tree.internal_nodes()) {
        const std::string name = tree.name(v).empty() ? "node" + std::to_string(v) : tree.name(v);
        const auto chromosomes = format_chromosomes(*res.genomes[static_cast<std::size_t>(v)]);
        r.genomes.emplace_back(name, chromosomes);
        r.text += genome_block(name, chromosomes);
    }
    return r;
}

// Writes genomes.txt, graph.txt and meta.json, or prints the genomes.
void emit_instance(Report& r, const Args& a, const std::string& graph_text, const Json& meta) {
    std::string genomes;
    for (const auto& [name, text] : r.genomes) genomes += genome_block(name, text);
    r.diagnostics = meta;
    if (a.out.empty()) {
        r.text = genomes;
        return;
    }
    fs::create_directories(a.out);
    write_file((fs::path(a.out) / "genomes.txt").string(), genomes);
    write_file((fs::path(a.out) / "graph.txt").string(), graph_text);
    write_file((fs::path(a.out) / "meta.json").string(), meta.dump(2) + "\n");
    r.inputs["out"] = a.out;
    r.text = "wrote " + a.out + " (genomes.txt, graph.txt, meta.json)\n";
}

Report cmd_reduce_matching(const Args& a) {
    Report r = report_for("reduce matching-median");
    const std::string graph_text = read_file(a.file);
    const SimpleGraph g = parse_graph(graph_text);
    const auto inst = matching_to_median(g);
    r.inputs = {{"graph", a.file}};
    for (std::size_t i = 0; i < 3; ++i)
        r.genomes.emplace_back("pi" + std::to_string(i + 1), format_chromosomes(inst.genomes[i]));
    Json subs = Json::array();
    for (const auto& s : inst.subdivisions)
        subs.push_back({{"edge", s.edge + 1},
                        {"path", {extremity_name(s.x), extremity_name(s.u), extremity_name(s.v), extremity_name(s.y)}}});
    Json meta = {{"reduction", "matching-median"},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"h_vertices", inst.h_vertices},
                 {"extremity_count", inst.extremity_count()},
                 {"slope_bound", kMedianReductionSlope},
                 {"vertex_extremities", "original vertex v is extremity v-1; its copy is extremity h_vertices+v-1"},
                 {"subdivisions", subs}};
    emit_instance(r, a, graph_text, meta);
    return r;
}

Report cmd_reduce_hamiltonian(const Args& a) {
    Report r = report_for("reduce hamiltonian-halving");
    const std::string graph_text = read_file(a.file);
    const Digraph d = parse_digraph(graph_text);
    std::optional<std::pair<int, int>> removed;
    if (!a.drop.empty()) {
        const auto parts = split_names(a.drop);
        if (parts.size() != 2) throw ParseError(0, "--drop expects u,v");
        try {
            removed = std::make_pair(std::stoi(parts[0]) - 1, std::stoi(parts[1]) - 1);
        } catch (const std::exception&) {
            throw ParseError(0, "--drop expects two vertex numbers");
        }
    }
    if (removed && !a.linear) throw ParseError(0, "--drop needs --linear");
    const auto red = hamiltonian_to_halving(d, a.linear ? HalvingVariant::linear : HalvingVariant::circular, removed);
    r.inputs = {{"graph", a.file}, {"linear", a.linear}};
    r.genomes.emplace_back("delta", format_chromosomes(red.delta));
    Json walk = Json::array();
    for (int v : red.walk) walk.push_back(v + 1);
    Json meta = {{"reduction", "hamiltonian-halving"},
                 {"variant", a.linear ? "linear" : "circular"},
                 {"vertices", d.vertex_count()},
                 {"removed_arc", red.removed_arc ? Json::array({red.removed_arc->first + 1, red.removed_arc->second + 1})
                                                 : Json()},
                 {"walk", walk},
                 {"target_similarity", d.vertex_count()}};
    emit_instance(r, a, graph_text, meta);
    return r;
}

Json quartet_meta(const QuartetInstance& inst) {
    std::string classes;
    for (auto c : inst.classes) classes += to_string(c);
    Json vgs = Json::array();
    for (const auto& vg : inst.vertex_gadgets) {
        Json ports = Json::array(), inter = Json::array(), edges = Json::array();
        for (const auto& p : vg.ports)
            ports.push_back({extremity_name(p.red_corner), extremity_name(p.middle), extremity_name(p.green_corner)});
        for (auto x : vg.intermediates) inter.push_back(extremity_name(x));
        for (auto e : vg.edges) edges.push_back(e + 1);
        vgs.push_back({{"vertex", vg.vertex + 1}, {"ports", ports}, {"intermediates", inter}, {"edges", edges}});
    }
    auto rail = [](const std::array<Adjacency, 5>& r) {
        Json j = Json::array();
        for (const auto& a : r) j.push_back({extremity_name(a.x), extremity_name(a.y)});
        return j;
    };
    Json egs = Json::array();
    for (const auto& eg : inst.edge_gadgets)
        egs.push_back({{"edge", eg.edge + 1},
                       {"u", eg.u + 1},
                       {"v", eg.v + 1},
                       {"port_u", eg.port_u + 1},
                       {"port_v", eg.port_v + 1},
                       {"ladder", {extremity_name(eg.la), extremity_name(eg.lb), extremity_name(eg.lc),
                                   extremity_name(eg.ld)}},
                       {"auxiliary", {extremity_name(eg.t1), extremity_name(eg.t2)}},
                       {"x_rail", rail(eg.x_rail)},
                       {"y_rail", rail(eg.y_rail)}});
    return {{"reduction", "maxcut-quartet"},
            {"vertices", inst.graph.vertex_count()},
            {"m", inst.m()},
            {"offset", inst.offset()},
            {"gene_count", inst.gene_count()},
            {"classes", classes},
            {"vertex_gadgets", vgs},
            {"edge_gadgets", egs}};
}

Report cmd_reduce_quartet(const Args& a) {
    Report r = report_for("reduce maxcut-quartet");
    const std::string graph_text = read_file(a.file);
    const auto inst = maxcut_to_quartet(parse_graph(graph_text));
    r.inputs = {{"graph", a.file}};
    r.score = Score::whole(inst.offset());
    for (std::size_t i = 0; i < 4; ++i)
        r.genomes.emplace_back("pi" + std::to_string(i + 1), format_chromosomes(inst.pi[i]));
    emit_instance(r, a, graph_text, quartet_meta(inst));
    return r;
}

QuartetInstance load_quartet(const std::string& dir) {
    const SimpleGraph g = parse_graph(read_file((fs::path(dir) / "graph.txt").string()));
    const auto all = load_genomes((fs::path(dir) / "genomes.txt").string());
    std::array<Genome, 4> pi;
    for (std::size_t i = 0; i < 4; ++i) pi[i] = ordinary_genome(all, "pi" + std::to_string(i + 1));
    return quartet_with_genomes(g, pi);
}

std::pair<Genome, Genome> load_solution(const std::string& path) {
    const auto all = load_genomes(path);
    auto has = [&](const char* n) {
        return std::any_of(all.begin(), all.end(), [&](const NamedGenome& g) { return g.name == n; });
    };
    if (has("alpha1") && has("alpha2")) return {ordinary_genome(all, "alpha1"), ordinary_genome(all, "alpha2")};
    if (all.size() < 2) throw ParseError(0, "a solution needs two genomes (alpha1, alpha2)");
    return {ordinary_genome(all, all[0].name), ordinary_genome(all, all[1].name)};
}

Report cmd_verify_quartet(const Args& a) {
    Report r = report_for("verify quartet");
    const auto inst = load_quartet(a.file);
    const auto rep = verify_instance(inst, a.exhaustive, a.samples, a.seed);
    r.inputs = {{"instance", a.file}, {"exhaustive", a.exhaustive}};
    r.exit_code = rep.ok ? kOk : kFailure;
    std::ostringstream os;
    os << rep.summary() << "\n";
    Json tables = Json::object();
    if (rep.ok) {
        r.score = rep.best_encode_score;
        os << "colorings " << rep.colorings << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
        auto table = [&](const char* title, const char* key, const std::vector<std::pair<Score, Score>>& t) {
            Json j = Json::array();
            os << title << ":";
            for (std::size_t i = 0; i < t.size(); ++i) {
                os << " " << i + 1 << "=" << t[i].first;
                if (t[i].second != t[i].first) os << ".." << t[i].second;
                j.push_back({score_json(t[i].first), score_json(t[i].second)});
            }
            os << "\n";
            tables[key] = j;
        };
        table("vertex gadgets", "vertex", rep.vertex_table);
        table("edge gadgets, alpha1 side", "edge_alpha1", rep.edge_alpha1_table);
        table("edge gadgets, alpha2 side", "edge_alpha2", rep.edge_alpha2_table);
        table("edge gadgets, overlap", "overlap", rep.overlap_table);
    }
    if (a.alternatives) {
        Json alt = Json::array();
        os << "topology scores (steinerization heuristic, not optima; 20m = " << inst.offset() << "):\n";
        for (const auto& t : compare_topologies(inst, 4, a.seed + 1)) {
            os << "  " << t.topology << " " << t.score << "\n";
            alt.push_back({{"topology", t.topology}, {"heuristic_x2", t.score.half_units()}});
        }
        tables["alternatives"] = alt;
    }
    r.diagnostics = {{"ok", rep.ok},
                     {"summary", rep.summary()},
                     {"colorings", rep.colorings},
                     {"exhaustive", rep.exhaustive},
                     {"max_cut", rep.max_cut},
                     {"offset", inst.offset()},
                     {"tables", tables}};
    r.text = os.str();
    return r;
}

Report cmd_decode_quartet(const Args& a) {
    Report r = report_for("decode quartet");
    const auto inst = load_quartet(a.file);
    const auto [a1, a2] = load_solution(a.solution);
    const auto chi = decode_solution(inst, a1);
    const auto c = cut_size(inst.graph, chi);
    r.inputs = {{"instance", a.file}, {"solution", a.solution}};
    r.score = quartet_score(inst, a1, a2);
    r.diagnostics = {{"coloring", coloring_text(chi)}, {"cut", c}};
    r.text = "coloring " + coloring_text(chi) + "\ncut " + std::to_string(c) + "\nscore " + r.score->to_string() + "\n";
    return r;
}

Report cmd_normalize_quartet(const Args& a) {
    Report r = report_for("normalize quartet");
    const auto inst = load_quartet(a.file);
    const auto [a1, a2] = load_solution(a.solution);
    const auto res = normalize(inst, a1, a2);
    r.inputs = {{"instance", a.file}, {"solution", a.solution}};
    r.score = res.after;
    Json log = Json::array();
    for (const auto& l : res.log) log.push_back(l);
    r.diagnostics = {{"before", score_json(res.before)},
                     {"before_x2", res.before.half_units()},
                     {"coloring", coloring_text(res.coloring)},
                     {"cut", cut_size(inst.graph, res.coloring)},
                     {"log", log}};
    r.genomes.emplace_back("alpha1", format_chromosomes(res.alpha1));
    r.genomes.emplace_back("alpha2", format_chromosomes(res.alpha2));
    r.text = "# score " + res.before.to_string() + " -> " + res.after.to_string() + "\n# coloring " +
             coloring_text(res.coloring) + "\n";
    for (const auto& l : res.log) r.text += "# " + l + "\n";
    for (const auto& [name, text] : r.genomes) r.text += genome_block(name, text);
    return r;
}

Report cmd_oracle_matching(const Args& a) {
    Report r = report_for("oracle matching");
    const SimpleGraph g = parse_graph(read_file(a.file));
    std::vector<WeightedEdge> edges;
    for (auto [u, v] : g.edges()) edges.push_back({u, v, 1});
    const WeightedGraph wg(g.vertex_count(), edges);
    const Matching m = brute_force_max_weight(wg);
    r.inputs = {{"graph", a.file}};
    r.score = Score::whole(static_cast<std::int64_t>(m.size()));
    Json pairs = Json::array();
    std::string text = "size " + std::to_string(m.size()) + "\nedges";
    for (auto [u, v] : m.pairs()) {
        pairs.push_back({u + 1, v + 1});
        text += " " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    r.diagnostics = {{"size", m.size()}, {"pairs", pairs}};
    r.text = text + "\n";
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"breakpoint median, halving and phylogeny toolkit", "bptk"};
    app.require_subcommand(1);
    Args a;
    bool json = false;
    std::function<Report()> action;
    app.add_flag("--json", json, "machine-readable output");

    auto leaf = [&](CLI::App* sub, std::function<Report()> fn) {
        sub->add_flag("--json", json, "machine-readable output");
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    const std::set<std::string> model_names{"general", "circular", "linear", "multilinear", "mixed"};
    auto model_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--model", a.model, "genome model")->check(CLI::IsMember(model_names));
        if (required) o->required();
    };

    auto* dist = leaf(app.add_subcommand("dist", "similarity and breakpoint distance of two genomes"),
                      [&] { return cmd_dist(a); });
    dist->add_option("file", a.file, "genome file")->required();
    dist->add_option("--a", a.a, "first genome")->required();
    dist->add_option("--b", a.b, "second genome")->required();
    model_opt(dist, false);

    auto* med = leaf(app.add_subcommand("median", "breakpoint median"), [&] { return median_report("median", a, false); });
    med->add_option("file", a.file, "genome file")->required();
    model_opt(med, true);
    med->add_option("--names", a.names, "comma-separated genome names (default: all ordinary genomes)");

    auto* hal = leaf(app.add_subcommand("halving", "genome halving"),
                     [&] { return halving_report("halving", a, false, false); });
    hal->add_option("file", a.file, "genome file")->required();
    hal->add_option("--dup", a.dup, "duplicated genome")->required();
    model_opt(hal, false);

    auto* gh = leaf(app.add_subcommand("guided-halving", "guided genome halving"),
                    [&] { return halving_report("guided-halving", a, true, false); });
    gh->add_option("file", a.file, "genome file")->required();
    gh->add_option("--dup", a.dup, "duplicated genome")->required();
    gh->add_option("--guide", a.guide, "outgroup genome")->required();
    model_opt(gh, false);

    auto* phy = leaf(app.add_subcommand("phylogeny", "small phylogeny by Steinerization"), [&] { return cmd_phylogeny(a); });
    phy->add_option("genomes", a.file, "genome file")->required();
    phy->add_option("--tree", a.file2, "Newick tree file")->required();
    phy->add_option("--init", a.init, "nearest-leaf or random")->check(CLI::IsMember({"nearest-leaf", "random"}));
    phy->add_option("--seed", a.seed, "seed for random initialization");
    phy->add_option("--max-rounds", a.max_rounds, "sweep limit");
    model_opt(phy, false);

    auto* reduce = app.add_subcommand("reduce", "build a hardness-reduction instance");
    reduce->require_subcommand(1);
    auto* rm = leaf(reduce->add_subcommand("matching-median", "cubic matching to median"),
                    [&] { return cmd_reduce_matching(a); });
    auto* rh = leaf(reduce->add_subcommand("hamiltonian-halving", "Hamiltonian cycle to halving"),
                    [&] { return cmd_reduce_hamiltonian(a); });
    auto* rq = leaf(reduce->add_subcommand("maxcut-quartet", "cubic max-cut to breakpoint quartet"),
                    [&] { return cmd_reduce_quartet(a); });
    for (auto* sub : {rm, rh, rq}) {
        sub->add_option("graph", a.file, "graph file")->required();
        sub->add_option("--out", a.out, "instance directory");
    }
    rh->add_flag("--linear", a.linear, "linear variant");
    rh->add_option("--drop", a.drop, "removed arc u,v (linear variant)");

    auto* verify = app.add_subcommand("verify", "check a reduction instance");
    verify->require_subcommand(1);
    auto* vq = leaf(verify->add_subcommand("quartet", "max-cut quartet identities"), [&] { return cmd_verify_quartet(a); });
    vq->add_option("instance", a.file, "instance directory")->required();
    vq->add_flag("--exhaustive", a.exhaustive, "enumerate every coloring");
    vq->add_option("--samples", a.samples, "sampled colorings above 8 vertices");
    vq->add_option("--seed", a.seed, "sampling seed");
    vq->add_flag("--alternatives", a.alternatives, "heuristic scores of all three quartet topologies");

    auto* decode = app.add_subcommand("decode", "read a cut off a quartet solution");
    decode->require_subcommand(1);
    auto* dq = leaf(decode->add_subcommand("quartet", "decode alpha1"), [&] { return cmd_decode_quartet(a); });
    auto* normalize_cmd = app.add_subcommand("normalize", "bring a quartet solution to normal form");
    normalize_cmd->require_subcommand(1);
    auto* nq = leaf(normalize_cmd->add_subcommand("quartet", "normalize alpha1, alpha2"),
                    [&] { return cmd_normalize_quartet(a); });
    for (auto* sub : {dq, nq}) {
        sub->add_option("instance", a.file, "instance directory")->required();
        sub->add_option("--solution", a.solution, "genome file with alpha1 and alpha2")->required();
    }

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers (small inputs only)");
    oracle->require_subcommand(1);
    auto* om = leaf(oracle->add_subcommand("median", "exhaustive median"),
                    [&] { return median_report("oracle median", a, true); });
    om->add_option("file", a.file, "genome file")->required();
    model_opt(om, true);
    om->add_option("--names", a.names, "comma-separated genome names");
    auto* oh = leaf(oracle->add_subcommand("halving", "exhaustive (guided) halving"), [&] {
        return halving_report(a.guide.empty() ? "oracle halving" : "oracle guided-halving", a, !a.guide.empty(), true);
    });
    oh->add_option("file", a.file, "genome file")->required();
    oh->add_option("--dup", a.dup, "duplicated genome")->required();
    oh->add_option("--guide", a.guide, "outgroup genome for guided halving");
    model_opt(oh, false);
    auto* omt = leaf(oracle->add_subcommand("matching", "exhaustive maximum matching"),
                     [&] { return cmd_oracle_matching(a); });
    omt->add_option("graph", a.file, "graph file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        const Report r = action();
        out << (json ? to_json(r) : r.text);
        return r.exit_code;
    } catch (const HardModelError& e) {
        err << "error: " << e.what() << "\n";
        return kHardModel;
    } catch (const OracleSizeError& e) {
        err << "error: " << e.what() << "\n";
        return kOracleBound;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const GenomeError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const GeneSetMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace bptk::cli
