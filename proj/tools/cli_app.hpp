#ifndef BSPCLI_APP_HPP
#define BSPCLI_APP_HPP

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bsp/bsp.hpp"

namespace bspcli {

using json = nlohmann::ordered_json;

enum ExitCode { ok = 0, input_error = 2, limit_error = 3, precondition_error = 4 };

struct RunConfig {
    std::string command;
    std::string input;
    std::uint64_t budget = bsp::default_budget;
    int guard = bsp::default_size_guard;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool timings = false;
};

// raised for non-Berge input under --verify-berge; exit 4
struct NotBerge {
    std::string message;
};

inline std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bsp::InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline json set_json(const bsp::VertexSet& s) { return json(s.to_vector()); }

inline std::string set_text(const bsp::VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + "}";
}

inline std::string list_text(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

// "3", "v3" or a vertex label; comma separated
inline bsp::VertexSet parse_vertex_list(const bsp::Graph& g, const std::string& text) {
    bsp::VertexSet s(g.vertex_count());
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) continue;
        long long v = -1;
        std::string digits = (tok.size() > 1 && tok[0] == 'v') ? tok.substr(1) : tok;
        if (!bsp::detail::parse_int(digits, v)) {
            v = -1;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (!g.labels().empty() && g.labels()[u] == tok) v = u;
            if (v < 0) throw bsp::InputError("unknown vertex " + tok);
        }
        if (v < 0 || v >= g.vertex_count()) throw bsp::InputError("vertex " + tok + " out of range");
        s.insert(static_cast<int>(v));
    }
    return s;
}

inline json envelope(const RunConfig& cfg) {
    json j;
    j["tool"] = "bspcli";
    j["version"] = bsp::version;
    j["command"] = cfg.command;
    j["config"] = {{"input", cfg.input}, {"budget", cfg.budget}, {"guard", cfg.guard},
                   {"format", cfg.format}, {"seed", cfg.seed}};
    j["warnings"] = json::array();
    return j;
}

inline bsp::Graph load_graph(const RunConfig& cfg, std::vector<std::string>& warnings) {
    bsp::GrfResult r = bsp::parse_grf(read_file(cfg.input));
    warnings = r.warnings;
    return r.graph;
}

inline void require_format(const RunConfig& cfg, bool dot_ok) {
    if (cfg.format == "dot" && !dot_ok) throw bsp::InputError("--format dot is only available for bsp");
}

// ---- recognize ----------------------------------------------------------------

inline json recognize_json(const bsp::BasicVerdict& v) {
    json r;
    r["class"] = bsp::to_string(v.cls);
    if (v.cls == bsp::BasicClass::bipartite || v.cls == bsp::BasicClass::cobipartite)
        r["witness"] = {{"sides", {set_json(v.coloring[0]), set_json(v.coloring[1])}}};
    if (v.double_split) {
        const auto& d = *v.double_split;
        r["m"] = d.m;
        r["n"] = d.n;
        r["witness"] = {{"a", d.a}, {"b", d.b}, {"c", d.c}, {"d", d.d}};
    }
    return r;
}

inline void cmd_recognize(const RunConfig& cfg, json& j, std::ostream& out) {
    std::vector<std::string> warnings;
    bsp::Graph g = load_graph(cfg, warnings);
    bsp::BasicVerdict v = bsp::is_basic(g, cfg.budget);
    if (!v.decided) throw bsp::BudgetExhausted("basic class recognition ran out of budget");
    j["warnings"] = warnings;
    j["result"] = recognize_json(v);
    if (cfg.format != "text") return;
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    if (v.double_split)
        out << "double_split m=" << v.double_split->m << " n=" << v.double_split->n << '\n'
            << "a: " << list_text(v.double_split->a) << '\n'
            << "b: " << list_text(v.double_split->b) << '\n'
            << "c: " << list_text(v.double_split->c) << '\n'
            << "d: " << list_text(v.double_split->d) << '\n';
    else
        out << bsp::to_string(v.cls) << '\n';
    if (v.cls == bsp::BasicClass::bipartite || v.cls == bsp::BasicClass::cobipartite)
        out << "sides: " << set_text(v.coloring[0]) << ' ' << set_text(v.coloring[1]) << '\n';
}

// ---- bsp --------------------------------------------------------------------------

inline json node_json(const bsp::DecompNode& node, std::size_t id) {
    json n;
    n["id"] = id;
    n["label"] = bsp::to_string(node.label);
    n["vertices"] = node.graph.vertex_count();
    n["edges"] = node.graph.edge_count();
    if (node.label == bsp::NodeLabel::basic) n["basic_class"] = bsp::to_string(node.basic_class);
    if (node.potentials) n["potentials"] = {{"c", node.potentials->c}, {"psi", node.potentials->psi}, {"phi", node.potentials->phi}};
    if (node.split) {
        n["complemented"] = node.complemented;
        n["split"] = {{"x1", set_json(node.split->x1)}, {"x2", set_json(node.split->x2)}};
    }
    if (!node.leaf()) n["children"] = {node.children[0], node.children[1]};
    if (node.answer) n["answer"] = *node.answer ? "YES" : "NO";
    return n;
}

inline void not_berge_check(const bsp::Graph& g, const RunConfig& cfg) {
    bsp::BergeVerdict b = bsp::is_berge_bruteforce(g, cfg.budget);
    if (!b.decided) throw bsp::BudgetExhausted("Berge check ran out of budget");
    if (!b.berge)
        throw NotBerge{"not Berge: odd " + std::string(b.in_complement ? "antihole" : "hole") + " (" +
                       std::to_string(b.witness.size()) + ")"};
}

inline void cmd_bsp(const RunConfig& cfg, bool verify_berge, bool oracle, json& j, std::ostream& out) {
    std::vector<std::string> warnings;
    bsp::Graph g = load_graph(cfg, warnings);
    j["warnings"] = warnings;
    if (verify_berge) not_berge_check(g, cfg);
    json r;
    if (oracle) {
        if (cfg.format == "dot") throw bsp::InputError("--format dot needs a decomposition tree, not --oracle");
        auto c = bsp::bruteforce_skew_partition(g, true, cfg.guard);
        r["verdict"] = c ? "YES" : "NO";
        r["method"] = "oracle";
        if (c) r["witness"] = {{"A", set_json(c->a)}, {"B", set_json(c->b)}};
        j["result"] = r;
        if (cfg.format != "text") return;
        for (const auto& w : warnings) out << "warning: " << w << '\n';
        out << "verdict: " << (c ? "YES" : "NO") << '\n';
        if (c) out << "witness: A=" << set_text(c->a) << " B=" << set_text(c->b) << '\n';
        return;
    }
    bsp::TreeOptions opt;
    opt.budget = cfg.budget;
    bsp::BspDetection d = bsp::detect_bsp_berge(g, opt);
    bsp::CountingReport counting = bsp::verify_counting(d.tree);
    r["verdict"] = d.has_bsp ? "YES" : "NO";
    r["method"] = "tree";
    r["tree"] = {{"size", d.tree.size()}, {"search_nodes", d.tree.search_nodes}, {"counting_holds", counting.holds}};
    json nodes = json::array();
    for (std::size_t i = 0; i < d.tree.size(); ++i) nodes.push_back(node_json(d.tree.nodes[i], i));
    r["tree"]["nodes"] = nodes;
    j["result"] = r;
    if (cfg.format == "dot") {
        out << bsp::to_dot(d.tree);
        return;
    }
    if (cfg.format != "text") return;
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    out << "verdict: " << (d.has_bsp ? "YES" : "NO") << '\n';
    out << "tree: " << d.tree.size() << " nodes, counting " << (counting.holds ? "holds" : "FAILS") << '\n';
    for (std::size_t i = 0; i < d.tree.size(); ++i) {
        const bsp::DecompNode& node = d.tree.nodes[i];
        out << "node " << i << ' ' << bsp::to_string(node.label);
        if (node.label == bsp::NodeLabel::basic) out << '(' << bsp::to_string(node.basic_class) << ')';
        out << " n=" << node.graph.vertex_count() << " m=" << node.graph.edge_count();
        if (node.potentials) out << " c=" << node.potentials->c << " psi=" << node.potentials->psi << " phi=" << node.potentials->phi;
        if (!node.leaf())
            out << " children=" << node.children[0] << ',' << node.children[1] << (node.complemented ? " complement" : "");
        if (node.answer) out << " answer=" << (*node.answer ? "YES" : "NO");
        out << '\n';
    }
}

// ---- twojoin ----------------------------------------------------------------------

inline json split_json(const bsp::ClassifiedSplit& c) {
    const auto& s = c.split;
    const auto& k = c.cls;
    return json{{"x1", set_json(s.x1)}, {"x2", set_json(s.x2)}, {"a1", set_json(s.a1)}, {"b1", set_json(s.b1)},
                {"a2", set_json(s.a2)}, {"b2", set_json(s.b2)},
                {"class",
                 {{"connected", k.connected}, {"substantial", k.substantial}, {"proper", k.proper},
                  {"path_side", bsp::to_string(k.path_side)}, {"parity", bsp::to_string(k.parity)},
                  {"degenerate_items", k.degenerate_items}, {"cutting1", k.cutting1}}}};
}

inline void split_text(const bsp::ClassifiedSplit& c, std::ostream& out) {
    const auto& s = c.split;
    const auto& k = c.cls;
    out << "X1=" << set_text(s.x1) << " X2=" << set_text(s.x2) << " A1=" << set_text(s.a1) << " B1=" << set_text(s.b1)
        << " A2=" << set_text(s.a2) << " B2=" << set_text(s.b2) << '\n'
        << "  connected=" << k.connected << " substantial=" << k.substantial << " proper=" << k.proper
        << " path_side=" << bsp::to_string(k.path_side) << " parity=" << bsp::to_string(k.parity)
        << " degenerate_items=[" << list_text(k.degenerate_items) << "] cutting1=" << k.cutting1 << '\n';
}

inline void cmd_twojoin(const RunConfig& cfg, const std::string& mode, json& j, std::ostream& out) {
    std::vector<std::string> warnings;
    bsp::Graph g = load_graph(cfg, warnings);
    std::vector<bsp::ClassifiedSplit> found;
    std::uint64_t nodes = 0;
    if (mode == "nonpath") {
        bsp::TwoJoinSearch s = bsp::find_nonpath_proper_2join(g, cfg.budget);
        if (s.result.exhausted()) throw bsp::BudgetExhausted("2-join search ran out of budget");
        nodes = s.result.nodes;
        if (s.found) found.push_back(*s.found);
    } else if (mode == "path") {
        found = bsp::find_path_2joins(g);
    } else {
        found = bsp::bruteforce_2join_oracle(g, cfg.guard);
    }
    json list = json::array();
    for (const auto& c : found) list.push_back(split_json(c));
    j["warnings"] = warnings;
    j["result"] = {{"mode", mode}, {"count", found.size()}, {"search_nodes", nodes}, {"splits", list}};
    if (cfg.format != "text") return;
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    if (found.empty()) out << "no " << (mode == "all" ? "" : mode + " ") << "2-join\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
        out << "split " << i << ": ";
        split_text(found[i], out);
    }
}

// ---- gadget -----------------------------------------------------------------------

inline void cmd_gadget(const RunConfig& cfg, bool prime, bool validate, const std::string& labels_path,
                       const std::string& polarity, json& j, std::ostream& out) {
    bsp::Sat3Instance inst = bsp::parse_dimacs(read_file(cfg.input));
    bsp::GadgetOptions opt;
    opt.polarity = polarity == "positive_to_t" ? bsp::Polarity::positive_to_t : bsp::Polarity::positive_to_f;
    if (validate) {
        bsp::CrossValidation v = bsp::cross_validate(inst, opt, cfg.budget);
        json r{{"variables", inst.n_vars},
               {"clauses", inst.clauses.size()},
               {"polarity", bsp::to_string(opt.polarity)},
               {"sat", v.sat},
               {"odd_us_path", v.odd_path},
               {"bsp_gprime", v.bsp_gprime},
               {"triples_skew", v.triples_skew},
               {"triples_balanced", v.triples_balanced},
               {"audit_ok", v.audit_ok},
               {"search_nodes", v.search_nodes},
               {"chain_holds", v.ok()},
               {"broken", v.broken}};
        if (v.assignment) r["assignment"] = *v.assignment;
        if (v.path) r["path"] = v.path->vertices;
        j["result"] = r;
        if (cfg.format != "text") return;
        out << "sat: " << (v.sat ? "yes" : "no") << '\n'
            << "odd u-s path: " << (v.odd_path ? "yes" : "no") << '\n'
            << "bsp_gprime=" << (v.bsp_gprime ? "true" : "false") << '\n'
            << "triples skew: " << (v.triples_skew ? "yes" : "no") << '\n'
            << "triples balanced: " << (v.triples_balanced ? "yes" : "no") << '\n'
            << "audit: " << (v.audit_ok ? "ok" : "FAILED") << '\n'
            << "chain: " << (v.ok() ? "holds" : "BROKEN") << '\n';
        for (const auto& b : v.broken) out << "broken: " << b << '\n';
        return;
    }
    bsp::BienstockLayout lay = bsp::build_bienstock(inst, opt);
    if (prime) lay = bsp::augment_prime(lay);
    const bsp::Graph& g = lay.graph;
    if (!labels_path.empty()) {
        std::ofstream lf(labels_path, std::ios::binary);
        if (!lf) throw bsp::InputError("cannot write " + labels_path);
        lf << bsp::write_labels(g);
    }
    json labels = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    j["result"] = {{"variables", inst.n_vars},   {"clauses", inst.clauses.size()},
                   {"prime", prime},             {"polarity", bsp::to_string(opt.polarity)},
                   {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                   {"edge_list", g.edges()},     {"labels", labels}};
    if (cfg.format != "text") return;
    std::vector<std::string> comments{"gadget variables=" + std::to_string(inst.n_vars) +
                                      " clauses=" + std::to_string(inst.clauses.size()) +
                                      " polarity=" + bsp::to_string(opt.polarity) + (prime ? " prime" : "")};
    if (labels_path.empty())
        for (int v = 0; v < g.vertex_count(); ++v) comments.push_back("label " + std::to_string(v) + ' ' + g.label(v));
    out << bsp::write_grf(g, comments);
}

// ---- checkpartition ---------------------------------------------------------------

inline void cmd_checkpartition(const RunConfig& cfg, const std::string& a_text, const std::string& b_text, json& j,
                               std::ostream& out) {
    std::vector<std::string> warnings;
    bsp::Graph g = load_graph(cfg, warnings);
    bsp::VertexSet b = parse_vertex_list(g, b_text);
    bsp::VertexSet a = a_text.empty() ? g.vertices() - b : parse_vertex_list(g, a_text);
    bsp::SkewVerdict skew = bsp::verify_skew_partition(g, a, b);
    json r{{"A", set_json(a)}, {"B", set_json(b)}, {"skew", skew.skew}};
    j["warnings"] = warnings;
    if (!skew.skew) {
        r["reason"] = skew.reason;
        j["result"] = r;
        if (cfg.format == "text") out << "not skew: " << skew.reason << '\n';
        return;
    }
    bsp::BalanceVerdict bal = bsp::verify_balanced(g, a, b, cfg.budget);
    if (!bal.decided) throw bsp::BudgetExhausted("balancedness check ran out of budget");
    r["balanced"] = bal.balanced;
    if (bal.witness)
        r["witness"] = {{"kind", bal.witness_is_antipath ? "odd antipath" : "odd path"}, {"vertices", bal.witness->vertices}};
    j["result"] = r;
    if (cfg.format != "text") return;
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    out << (bal.balanced ? "skew, balanced" : "skew, NOT balanced") << '\n';
    if (bal.witness)
        out << "witness: " << (bal.witness_is_antipath ? "odd antipath " : "odd path ") << list_text(bal.witness->vertices)
            << '\n';
}

// ---- entry point ------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced skew partitions and 2-joins in Berge graphs", "bspcli"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bsp::version));
    RunConfig cfg;
    app.add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
    app.add_option("--guard", cfg.guard, "size guard for brute-force routines")->check(CLI::Range(1, 63));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", cfg.seed, "seed, echoed in every output");
    app.add_flag("--timings", cfg.timings, "add wall-clock time to JSON output");

    auto* rec = app.add_subcommand("recognize", "decide whether a graph is basic");
    rec->add_option("input", cfg.input, "GRF file, - for stdin")->required();

    bool verify_berge = false, oracle = false;
    auto* bspc = app.add_subcommand("bsp", "decide whether a Berge graph has a balanced skew partition");
    bspc->add_option("input", cfg.input, "GRF file")->required();
    bspc->add_flag("--verify-berge", verify_berge, "reject non-Berge input (exit 4)");
    bspc->add_flag("--oracle", oracle, "use the brute-force oracle instead of the tree");

    std::string mode = "nonpath";
    auto* tj = app.add_subcommand("twojoin", "list 2-joins");
    tj->add_option("input", cfg.input, "GRF file")->required();
    auto* f_nonpath = tj->add_flag("--nonpath", "non-path proper 2-join (default)");
    auto* f_path = tj->add_flag("--path", "path 2-joins from flat paths");
    auto* f_all = tj->add_flag("--all", "every 2-join, brute force under --guard");
    f_nonpath->excludes(f_path)->excludes(f_all);
    f_path->excludes(f_all);

    bool prime = false, validate = false;
    std::string labels_path, polarity = "positive_to_f";
    auto* gd = app.add_subcommand("gadget", "3-SAT to graph reduction");
    gd->add_option("input", cfg.input, "DIMACS CNF file")->required();
    gd->add_flag("--prime", prime, "add the vertices a and b");
    gd->add_flag("--validate", validate, "cross-validate SAT, odd u-s path and BSP");
    gd->add_option("--labels", labels_path, "write the label map to this file");
    gd->add_option("--polarity", polarity, "literal wiring")->check(CLI::IsMember({"positive_to_f", "positive_to_t"}));

    std::string a_text, b_text;
    auto* cp = app.add_subcommand("checkpartition", "check a partition (A, B) for skewness and balance");
    cp->add_option("input", cfg.input, "GRF file")->required();
    cp->add_option("--A", a_text, "vertices of A; default is the rest");
    cp->add_option("--B", b_text, "vertices of B, e.g. 1,2 or v1,v2")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (*f_path) mode = "path";
    if (*f_all) mode = "all";
    json j = envelope(cfg);
    const auto start = std::chrono::steady_clock::now();
    try {
        require_format(cfg, cfg.command == "bsp");
        if (cfg.command == "recognize") cmd_recognize(cfg, j, out);
        else if (cfg.command == "bsp") cmd_bsp(cfg, verify_berge, oracle, j, out);
        else if (cfg.command == "twojoin") cmd_twojoin(cfg, mode, j, out);
        else if (cfg.command == "gadget") cmd_gadget(cfg, prime, validate, labels_path, polarity, j, out);
        else cmd_checkpartition(cfg, a_text, b_text, j, out);
    } catch (const NotBerge& e) {
        err << e.message << '\n';
        return precondition_error;
    } catch (const bsp::InputError& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const bsp::PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return precondition_error;
    } catch (const bsp::GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << "; raise --guard to allow it\n";
        return limit_error;
    } catch (const bsp::BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "; raise --budget to search further\n";
        return limit_error;
    }
    if (cfg.format == "json") {
        if (cfg.timings)
            j["timings_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out << j.dump(2) << '\n';
    }
    return ok;
}

}  // namespace bspcli

#endif
