// Command-line surface for the strong edge coloring toolkit: generators,
// exact solver, constructive colorers, verifier, discharging audits and
// bound evaluators over the "secg 1" text format.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "secg/constructions.hpp"
#include "secg/corpus.hpp"
#include "secg/discharging.hpp"
#include "secg/io.hpp"
#include "secg/reduction.hpp"
#include "secg/solver.hpp"

using json = nlohmann::ordered_json;
using namespace secg;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open input file " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

ParsedGraph load_graph(const std::string& path) {
    return parse_graph_text(read_input(path));
}

PlaneEmbedding require_embedding(ParsedGraph& pg) {
    if (!pg.embedding)
        throw std::invalid_argument(
            "this command needs an embedding: add 'r' rotation lines");
    return *pg.embedding;
}

std::string obj_name(const ObjRef& o) {
    return (o.type == ObjType::vertex ? "v" : "f") + std::to_string(o.id);
}

int run_gen(const std::string& kind, int k, int d, int rings,
            const std::string& in, std::vector<int> edge, int times, bool all,
            const std::string& out_path) {
    std::string text;
    if (kind == "ckd") {
        text = write_graph_text(gen_ckd({k, d}));
    } else if (kind == "prism") {
        text = write_graph_text(gen_prism());
    } else if (kind == "hex") {
        text = write_graph_text(gen_hex_patch(rings));
    } else {  // subdivide
        ParsedGraph pg = load_graph(in);
        PlaneEmbedding emb = require_embedding(pg);
        if (all) {
            std::vector<std::pair<int, int>> pairs;
            for (int e = 0; e < emb.graph().edge_count(); ++e)
                pairs.push_back(emb.graph().edge(e));
            for (auto [u, v] : pairs)
                emb = subdivide(emb, emb.graph().edge_id(u, v), times);
        } else {
            if (edge.size() != 2)
                throw std::invalid_argument("--edge needs two vertex ids");
            int id = emb.graph().edge_id(edge[0], edge[1]);
            if (id < 0) throw std::invalid_argument("unknown edge");
            emb = subdivide(emb, id, times);
        }
        text = write_graph_text(emb);
    }
    write_output(out_path, text);
    return 0;
}

int run_solve(const std::string& in, const std::string& cert_out, int max_colors,
              long long node_limit, double time_limit, bool as_json) {
    ParsedGraph pg = load_graph(in);
    SolverConfig cfg;
    cfg.max_colors = max_colors;
    cfg.node_limit = node_limit;
    cfg.time_limit_seconds = time_limit;
    IndexResult res = strong_chromatic_index(pg.graph, cfg);
    if (as_json) {
        json j;
        j["status"] = to_string(res.status);
        if (res.status == SolveStatus::feasible) j["chi_s"] = res.index;
        j["lower_bound"] = res.lower_bound;
        j["nodes"] = res.nodes;
        j["seconds"] = res.seconds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status       " << to_string(res.status) << "\n";
        if (res.status == SolveStatus::feasible)
            std::cout << "chi_s        " << res.index << "\n";
        std::cout << "lower bound  " << res.lower_bound << "\n"
                  << "nodes        " << res.nodes << "\n"
                  << "seconds      " << std::fixed << std::setprecision(3)
                  << res.seconds << "\n";
    }
    if (res.status != SolveStatus::feasible) return kExitVerifyFailure;
    Verdict v = verify_strong(pg.graph, res.witness);
    if (!v.valid) {
        std::cerr << "internal error: witness failed verification\n";
        return kExitVerifyFailure;
    }
    if (!cert_out.empty())
        write_output(cert_out, write_coloring_text(pg.graph, res.witness));
    return 0;
}

int greedy_default_palette(const Graph& g) {
    int p = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        p = std::max(p, static_cast<int>(edge_two_neighborhood(g, e).size()) + 1);
    return p;
}

int run_color(const std::string& mode, const std::string& in,
              const std::string& cert_out, int palette, double time_limit,
              bool as_json) {
    ParsedGraph pg = load_graph(in);
    StrongColoring col;
    int budget = -1;
    std::string algorithm = mode;
    if (mode == "auto" || mode == "girth6" || mode == "subcubic") {
        PlaneEmbedding emb = require_embedding(pg);
        ReductionStats stats;
        if (mode == "auto") {
            AutoResult r = color_auto(emb, &stats);
            col = std::move(r.coloring);
            budget = r.palette_bound;
            algorithm = r.used_subcubic ? "subcubic" : "girth6";
        } else if (mode == "girth6") {
            col = color_girth6(emb, &stats);
            budget = 3 * emb.graph().max_degree() + 6;
        } else {
            col = color_subcubic_girth6(emb, &stats);
            budget = 9;
        }
    } else if (mode == "greedy") {
        int p = palette > 0 ? palette : greedy_default_palette(pg.graph);
        std::vector<int> order(pg.graph.edge_count());
        for (int i = 0; i < pg.graph.edge_count(); ++i) order[i] = i;
        GreedyOutcome out = color_greedy(pg.graph, order, p);
        if (!out.ok) {
            auto [u, v] = pg.graph.edge(out.blocking_edge);
            std::cerr << "greedy failed: no free color for edge (" << u << ","
                      << v << ") with palette " << p << "\n";
            return kExitVerifyFailure;
        }
        col = std::move(out.coloring);
    } else {  // exact
        SolverConfig cfg;
        cfg.time_limit_seconds = time_limit;
        IndexResult res = strong_chromatic_index(pg.graph, cfg);
        if (res.status != SolveStatus::feasible) {
            std::cerr << "exact solve " << to_string(res.status) << "\n";
            return kExitVerifyFailure;
        }
        col = std::move(res.witness);
    }

    // Every coloring goes through the verifier before being printed.
    Verdict v = verify_strong(pg.graph, col);
    if (!v.valid) {
        std::cerr << "internal error: coloring failed verification ("
                  << v.conflicts.size() << " conflicts)\n";
        return kExitVerifyFailure;
    }
    if (as_json) {
        json j;
        j["algorithm"] = algorithm;
        if (budget > 0) j["budget"] = budget;
        j["palette"] = col.palette;
        j["colors_used"] = col.used_colors();
        j["valid"] = true;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "algorithm    " << algorithm << "\n";
        if (budget > 0) std::cout << "budget       " << budget << "\n";
        std::cout << "palette      " << col.palette << "\n"
                  << "colors used  " << col.used_colors() << "\n"
                  << "valid        yes\n";
    }
    if (!cert_out.empty())
        write_output(cert_out, write_coloring_text(pg.graph, col));
    return 0;
}

int run_verify(const std::string& in, const std::string& cert, bool as_json) {
    ParsedGraph pg = load_graph(in);
    StrongColoring col = parse_coloring_text(pg.graph, read_input(cert));
    if (!col.total()) {
        std::cerr << "certificate is partial: " << col.assigned_count() << "/"
                  << pg.graph.edge_count() << " edges colored\n";
        return kExitVerifyFailure;
    }
    Verdict v = verify_strong(pg.graph, col);
    if (as_json) {
        json j;
        j["valid"] = v.valid;
        j["conflicts"] = json::array();
        for (const Conflict& c : v.conflicts) {
            auto [u1, v1] = pg.graph.edge(c.e1);
            auto [u2, v2] = pg.graph.edge(c.e2);
            j["conflicts"].push_back({{"edge1", {u1, v1}},
                                      {"edge2", {u2, v2}},
                                      {"distance", c.distance}});
        }
        std::cout << j.dump(2) << "\n";
    } else if (v.valid) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid: " << v.conflicts.size() << " conflicting pairs\n";
        for (const Conflict& c : v.conflicts) {
            auto [u1, v1] = pg.graph.edge(c.e1);
            auto [u2, v2] = pg.graph.edge(c.e2);
            std::cout << "  (" << u1 << "," << v1 << ") ~ (" << u2 << "," << v2
                      << ")  color " << col.color[c.e1] + 1 << "  distance "
                      << c.distance << "\n";
        }
    }
    return v.valid ? 0 : kExitVerifyFailure;
}

int run_discharge(const std::string& mode_name, const std::string& in,
                  bool as_json) {
    ParsedGraph pg = load_graph(in);
    PlaneEmbedding emb = require_embedding(pg);
    DischargeMode mode = mode_name == "general" ? DischargeMode::general
                                                : DischargeMode::subcubic;
    bool auditable = girth(emb.graph()) >= 6;

    json j;
    j["mode"] = mode_name;
    j["components"] = json::array();
    std::ostringstream text;

    auto split = split_components(emb);
    for (size_t ci = 0; ci < split.size(); ++ci) {
        const PlaneEmbedding& ce = split[ci].embedding;
        const Graph& g = ce.graph();
        ChargeLedger initial = initial_charges(ce);
        ChargeLedger ledger = mode == DischargeMode::general
                                  ? discharge_general(ce)
                                  : discharge_subcubic(ce);
        std::optional<AuditReport> report;
        if (auditable) report = audit(ce, mode);

        if (as_json) {
            json jc;
            jc["vertices"] = split[ci].parent_vertex;
            jc["initial_total"] = initial.total().str();
            jc["final_total"] = ledger.total().str();
            jc["objects"] = json::array();
            for (int v = 0; v < g.vertex_count(); ++v)
                jc["objects"].push_back(
                    {{"object", "v" + std::to_string(v)},
                     {"class", to_string(classify_vertex(g, v).kind)},
                     {"initial", initial.vertex_charge[v].str()},
                     {"final", ledger.vertex_charge[v].str()}});
            for (size_t f = 0; f < ce.faces().size(); ++f)
                jc["objects"].push_back(
                    {{"object", "f" + std::to_string(f)},
                     {"length", ce.faces()[f].length()},
                     {"initial", initial.face_charge[f].str()},
                     {"final", ledger.face_charge[f].str()}});
            jc["transfers"] = json::array();
            for (const Transfer& t : ledger.transfers)
                jc["transfers"].push_back({{"rule", t.rule},
                                           {"from", obj_name(t.from)},
                                           {"to", obj_name(t.to)},
                                           {"amount", t.amount.str()}});
            if (report) {
                json ja;
                ja["negative"] = json::array();
                for (const ObjRef& o : report->negative)
                    ja["negative"].push_back(obj_name(o));
                ja["configuration"] =
                    report->config ? to_string(report->config->kind) : "none";
                ja["contradiction"] = report->contradiction;
                jc["audit"] = ja;
            }
            j["components"].push_back(jc);
        } else {
            text << "component " << ci << " (" << g.vertex_count()
                 << " vertices, " << g.edge_count() << " edges)\n";
            text << "  object  class/length      initial   final\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                text << "  v" << std::left << std::setw(6) << v << "  "
                     << std::setw(16) << to_string(classify_vertex(g, v).kind)
                     << "  " << std::right << std::setw(7)
                     << initial.vertex_charge[v].str() << "   "
                     << ledger.vertex_charge[v].str() << "\n";
            for (size_t f = 0; f < ce.faces().size(); ++f)
                text << "  f" << std::left << std::setw(6) << f << "  "
                     << std::setw(16)
                     << ("length " + std::to_string(ce.faces()[f].length()))
                     << "  " << std::right << std::setw(7)
                     << initial.face_charge[f].str() << "   "
                     << ledger.face_charge[f].str() << "\n";
            text << "  totals: initial " << initial.total().str() << ", final "
                 << ledger.total().str() << "\n";
            text << "  transfers (" << ledger.transfers.size() << "):\n";
            for (const Transfer& t : ledger.transfers)
                text << "    " << std::left << std::setw(3) << t.rule << " "
                     << obj_name(t.from) << " -> " << obj_name(t.to) << "  "
                     << t.amount.str() << "\n";
            if (report) {
                text << "  audit: ";
                if (report->negative.empty())
                    text << "no negative objects";
                else {
                    text << report->negative.size() << " negative (";
                    for (size_t i = 0; i < report->negative.size(); ++i)
                        text << (i ? " " : "") << obj_name(report->negative[i]);
                    text << ")";
                }
                text << "; configuration "
                     << (report->config ? to_string(report->config->kind)
                                        : "none")
                     << (report->contradiction ? "; PAPER-CONTRADICTION" : "")
                     << "\n";
            } else {
                text << "  audit: skipped (girth < 6)\n";
            }
        }
    }
    if (!auditable) j["audit"] = "skipped (girth < 6)";
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_bounds(const std::string& kind, int k, int delta, int d, long long c,
               bool as_json) {
    json j;
    std::ostringstream text;
    if (kind == "ckd") {
        long long lo = ckd_lower_bound(k, d), hi = ckd_upper_bound(k, d);
        j = {{"kind", "ckd"}, {"k", k}, {"d", d}, {"lower", lo}, {"upper", hi}};
        text << "ckd lower  " << lo << "\nckd upper  " << hi << "\n";
    } else if (kind == "conjecture19") {
        long long b = conjecture_bound(k, delta, c);
        j = {{"kind", "conjecture19"}, {"k", k}, {"delta", delta},
             {"constant", c}, {"bound", b}};
        text << "bound  " << b << "\n";
    } else if (kind == "erdos-nesetril") {
        long long b = erdos_nesetril_bound(delta);
        j = {{"kind", "erdos-nesetril"}, {"delta", delta}, {"bound", b}};
        text << "bound  " << b << "\n";
    } else {  // molloy-reed
        Rat b = molloy_reed_bound(delta);
        j = {{"kind", "molloy-reed"}, {"delta", delta}, {"bound", b.str()},
             {"bound_decimal", static_cast<double>(b.num) / b.den}};
        text << "bound  " << b.str() << " (= "
             << static_cast<double>(b.num) / b.den << ")\n";
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_corpus(const std::string& out_dir, std::uint64_t seed,
               const std::string& which) {
    std::vector<CorpusInstance> instances;
    if (which == "general")
        instances = general_corpus(seed);
    else if (which == "subcubic")
        instances = subcubic_corpus(seed);
    else
        instances = full_corpus(seed);
    for (const CorpusInstance& inst : instances) {
        std::string path = out_dir + "/" + inst.name + ".secg";
        write_output(path, write_graph_text(inst.emb));
        std::cout << inst.name << "  n=" << inst.emb.graph().vertex_count()
                  << " m=" << inst.emb.graph().edge_count() << "\n";
    }
    std::cout << instances.size() << " instances written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong edge coloring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool as_json = false;
    double time_limit = 0;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--time-limit", time_limit, "time limit in seconds");
    app.add_option("--seed", seed, "seed for randomized corpora");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instance graphs");
    gen->require_subcommand(1);
    int k = 5, d = 5, rings = 2, times = 1;
    bool all = false;
    std::vector<int> edge;
    std::string in, out_path, cert, mode = "auto";
    auto* gen_ckd_cmd = gen->add_subcommand("ckd", "odd cycle with pendant leaves");
    gen_ckd_cmd->add_option("--k", k, "odd cycle length")->required();
    gen_ckd_cmd->add_option("--d", d, "cycle-vertex degree")->required();
    gen_ckd_cmd->add_option("-o,--out", out_path, "output file");
    auto* gen_prism_cmd = gen->add_subcommand("prism", "complement of C_6");
    gen_prism_cmd->add_option("-o,--out", out_path, "output file");
    auto* gen_hex_cmd = gen->add_subcommand("hex", "hexagonal patch");
    gen_hex_cmd->add_option("--rings", rings, "ring count")->required();
    gen_hex_cmd->add_option("-o,--out", out_path, "output file");
    auto* gen_sub_cmd = gen->add_subcommand("subdivide", "subdivide edges");
    gen_sub_cmd->add_option("-i,--in", in, "input graph (needs rotations)");
    gen_sub_cmd->add_option("--edge", edge, "edge endpoints u v")->expected(2);
    gen_sub_cmd->add_option("--times", times, "new 2-vertices per edge");
    gen_sub_cmd->add_flag("--all", all, "subdivide every edge");
    gen_sub_cmd->add_option("-o,--out", out_path, "output file");

    // solve
    auto* solve = app.add_subcommand("solve", "exact strong chromatic index");
    int max_colors = 0;
    long long node_limit = 0;
    solve->add_option("-i,--in", in, "input graph");
    solve->add_option("-o,--certificate", cert, "write witness coloring");
    solve->add_option("--max-colors", max_colors, "palette cap");
    solve->add_option("--node-limit", node_limit, "search node budget");

    // color
    auto* color = app.add_subcommand("color", "constructive coloring");
    int palette = 0;
    color->add_option("--mode", mode, "auto|girth6|subcubic|greedy|exact")
        ->check(CLI::IsMember({"auto", "girth6", "subcubic", "greedy", "exact"}));
    color->add_option("-i,--in", in, "input graph");
    color->add_option("-o,--certificate", cert, "write coloring");
    color->add_option("--palette", palette, "palette for greedy mode");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring certificate");
    verify->add_option("-i,--in", in, "input graph")->required();
    verify->add_option("-c,--certificate", cert, "coloring file")->required();

    // discharge
    auto* discharge = app.add_subcommand("discharge", "charge audit");
    std::string dmode = "general";
    discharge->add_option("--mode", dmode, "general|subcubic")
        ->check(CLI::IsMember({"general", "subcubic"}));
    discharge->add_option("-i,--in", in, "input graph (needs rotations)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    bounds->require_subcommand(1);
    int delta = 3;
    long long constant = 0;
    auto* b_ckd = bounds->add_subcommand("ckd", "C_k^d sandwich bounds");
    b_ckd->add_option("--k", k)->required();
    b_ckd->add_option("--d", d)->required();
    auto* b_conj = bounds->add_subcommand("conjecture19", "girth-k conjecture");
    b_conj->add_option("--k", k)->required();
    b_conj->add_option("--delta", delta)->required();
    b_conj->add_option("--constant", constant)->required();
    auto* b_en = bounds->add_subcommand("erdos-nesetril", "Delta^2 conjecture");
    b_en->add_option("--delta", delta)->required();
    auto* b_mr = bounds->add_subcommand("molloy-reed", "1.998 Delta^2");
    b_mr->add_option("--delta", delta)->required();

    // corpus
    auto* corpus = app.add_subcommand("corpus", "emit the test corpus");
    std::string corpus_dir = ".", which = "full";
    corpus->add_option("--out", corpus_dir, "output directory")->required();
    corpus->add_option("--which", which, "general|subcubic|full")
        ->check(CLI::IsMember({"general", "subcubic", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::string kind = gen_ckd_cmd->parsed()     ? "ckd"
                               : gen_prism_cmd->parsed() ? "prism"
                               : gen_hex_cmd->parsed()   ? "hex"
                                                         : "subdivide";
            return run_gen(kind, k, d, rings, in, edge, times, all, out_path);
        }
        if (solve->parsed())
            return run_solve(in, cert, max_colors, node_limit, time_limit,
                             as_json);
        if (color->parsed())
            return run_color(mode, in, cert, palette, time_limit, as_json);
        if (verify->parsed()) return run_verify(in, cert, as_json);
        if (discharge->parsed()) return run_discharge(dmode, in, as_json);
        if (bounds->parsed()) {
            std::string kind = b_ckd->parsed()    ? "ckd"
                               : b_conj->parsed() ? "conjecture19"
                               : b_en->parsed()   ? "erdos-nesetril"
                                                  : "molloy-reed";
            return run_bounds(kind, k, delta, d, constant, as_json);
        }
        if (corpus->parsed()) return run_corpus(corpus_dir, seed, which);
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const IrreducibleGraphError& ex) {
        std::cerr << "error: " << ex.what() << "\n--- instance dump ---\n"
                  << ex.graph_dump;
        return kExitVerifyFailure;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
