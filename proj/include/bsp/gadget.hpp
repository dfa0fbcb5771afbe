#ifndef BSP_GADGET_HPP
#define BSP_GADGET_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"
#include "paths.hpp"

namespace bsp {

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;
    friend bool operator==(const Literal&, const Literal&) = default;
};

// 3-SAT restricted to clauses on three distinct variables
struct Sat3Instance {
    int n_vars = 3;
    std::vector<std::array<Literal, 3>> clauses;
};

inline void validate(const Sat3Instance& inst) {
    if (inst.n_vars < 3) throw InputError("a 3-SAT' instance needs at least 3 variables");
    if (inst.clauses.empty()) throw InputError("a 3-SAT' instance needs at least one clause");
    for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
        const auto& c = inst.clauses[j];
        for (int k = 0; k < 3; ++k)
            if (c[k].var < 0 || c[k].var >= inst.n_vars)
                throw InputError("clause " + std::to_string(j + 1) + " uses an undeclared variable");
        if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var)
            throw InputError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
}

// DIMACS CNF: 'c' comment lines, one "p cnf V C" header, clauses as
// 0-terminated integer lists. Every clause must have three distinct
// variables; fewer than 3 declared variables are padded to 3.
inline Sat3Instance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    int declared_vars = 0, declared_clauses = 0;
    std::vector<int> current;
    std::vector<std::vector<int>> raw;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first[0] == 'c') continue;
        if (first == "%") break;
        if (first == "p") {
            std::string fmt;
            if (header) throw InputError("line " + std::to_string(line_no) + ": second problem line");
            if (!(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" || declared_vars < 0 ||
                declared_clauses < 0)
                throw InputError("line " + std::to_string(line_no) + ": malformed problem line");
            header = true;
            continue;
        }
        if (!header) throw InputError("line " + std::to_string(line_no) + ": clause before the problem line");
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            std::size_t used = 0;
            int lit = 0;
            try {
                lit = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw InputError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
            if (lit == 0) {
                raw.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > declared_vars)
                    throw InputError("line " + std::to_string(line_no) + ": literal " + tok + " exceeds the declared variables");
                current.push_back(lit);
            }
        }
    }
    if (!header) throw InputError("missing problem line");
    if (!current.empty()) throw InputError("last clause is not terminated by 0");
    if (static_cast<int>(raw.size()) != declared_clauses)
        throw InputError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(raw.size()));
    Sat3Instance inst;
    inst.n_vars = std::max(declared_vars, 3);
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (raw[j].size() != 3)
            throw InputError("clause " + std::to_string(j + 1) + " has " + std::to_string(raw[j].size()) +
                             " literals, expected 3");
        std::array<Literal, 3> c;
        for (int k = 0; k < 3; ++k) c[k] = Literal{std::abs(raw[j][k]) - 1, raw[j][k] > 0};
        inst.clauses.push_back(c);
    }
    validate(inst);
    return inst;
}

inline std::string to_dimacs(const Sat3Instance& inst) {
    std::ostringstream os;
    os << "p cnf " << inst.n_vars << ' ' << inst.clauses.size() << '\n';
    for (const auto& c : inst.clauses) {
        for (const Literal& l : c) os << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
        os << "0\n";
    }
    return os.str();
}

inline constexpr int sat_var_guard = 24;

// Least satisfying assignment, x_1 most significant and false < true.
inline std::optional<std::vector<bool>> sat_bruteforce(const Sat3Instance& inst) {
    validate(inst);
    if (inst.n_vars > sat_var_guard) throw GuardExceeded("sat_bruteforce", inst.n_vars, sat_var_guard);
    const int n = inst.n_vars;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        auto value = [&](int var) { return (k >> (n - 1 - var) & 1) != 0; };
        bool all = true;
        for (const auto& c : inst.clauses) {
            bool sat = false;
            for (const Literal& l : c) sat = sat || value(l.var) == l.positive;
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) {
            std::vector<bool> a(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) a[v] = value(v);
            return a;
        }
    }
    return std::nullopt;
}

// Which pair of alpha_i a literal on x_i sends its z vertex to.
enum class Polarity { positive_to_f, positive_to_t };

inline const char* to_string(Polarity p) { return p == Polarity::positive_to_f ? "positive_to_f" : "positive_to_t"; }

struct GadgetOptions {
    Polarity polarity = Polarity::positive_to_f;
    // c_{n,3} d_{1,1} and c_{n,4} d_{1,2}, linking the last alpha to the first beta
    bool link_alpha_beta = true;
};

struct BienstockLayout {
    Graph graph;
    std::map<std::string, int> index;
    GadgetOptions options;
    int n_vars = 0, n_clauses = 0;
    bool augmented = false;
    int vertex(const std::string& label) const {
        auto it = index.find(label);
        if (it == index.end()) throw InputError("unknown gadget label " + label);
        return it->second;
    }
};

namespace detail {

inline std::string gadget_label(char kind, int i, int k) {
    return std::string(1, kind) + "_" + std::to_string(i) + "_" + std::to_string(k);
}

}  // namespace detail

// Vertex order: alpha_1..alpha_n (t1..t4, f1..f4, c1..c4 each), beta_1..beta_m
// (d1..d4, r, z1..z3 each), then u, w, s, v. Labels are 1-based, e.g. "t_2_3"
// and "r_4".
inline BienstockLayout build_bienstock(const Sat3Instance& inst, const GadgetOptions& opt = {}) {
    validate(inst);
    const int n = inst.n_vars, m = static_cast<int>(inst.clauses.size());
    const int total = 12 * n + 8 * m + 4;
    std::vector<std::string> labels;
    BienstockLayout lay;
    lay.options = opt;
    lay.n_vars = n;
    lay.n_clauses = m;
    auto add = [&](std::string l) {
        lay.index[l] = static_cast<int>(labels.size());
        labels.push_back(std::move(l));
    };
    for (int i = 1; i <= n; ++i)
        for (char kind : {'t', 'f', 'c'})
            for (int k = 1; k <= 4; ++k) add(detail::gadget_label(kind, i, k));
    for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= 4; ++k) add(detail::gadget_label('d', j, k));
        add("r_" + std::to_string(j));
        for (int k = 1; k <= 3; ++k) add(detail::gadget_label('z', j, k));
    }
    for (const char* l : {"u", "w", "s", "v"}) add(l);

    GraphBuilder b(total);
    auto at = [&](char kind, int i, int k) { return lay.index.at(detail::gadget_label(kind, i, k)); };
    auto e = [&](int x, int y) { b.add_edge(x, y); };
    for (int i = 1; i <= n; ++i) {
        auto t = [&](int k) { return at('t', i, k); };
        auto f = [&](int k) { return at('f', i, k); };
        auto c = [&](int k) { return at('c', i, k); };
        e(c(1), t(1)), e(t(1), c(3)), e(c(1), f(1)), e(f(1), c(3));
        e(c(2), t(2)), e(t(2), t(3)), e(t(3), t(4)), e(t(4), c(4));
        e(c(2), f(2)), e(f(2), f(3)), e(f(3), f(4)), e(f(4), c(4));
        e(t(1), f(2)), e(t(1), f(3)), e(f(1), t(2)), e(f(1), t(3)), e(t(3), f(3));
    }
    for (int j = 1; j <= m; ++j) {
        auto d = [&](int k) { return at('d', j, k); };
        const int r = lay.index.at("r_" + std::to_string(j));
        e(d(1), r), e(r, d(3));
        for (int k = 1; k <= 3; ++k) e(d(2), at('z', j, k)), e(at('z', j, k), d(4));
    }
    for (int i = 1; i < n; ++i) e(at('c', i, 3), at('c', i + 1, 1)), e(at('c', i, 4), at('c', i + 1, 2));
    for (int j = 1; j < m; ++j) e(at('d', j, 3), at('d', j + 1, 1)), e(at('d', j, 4), at('d', j + 1, 2));
    const int u = lay.index.at("u"), w = lay.index.at("w"), s = lay.index.at("s"), v = lay.index.at("v");
    e(u, at('c', 1, 2));
    e(w, at('c', 1, 1));
    e(s, w);
    e(v, at('d', m, 3));
    e(v, at('d', m, 4));
    if (opt.link_alpha_beta) e(at('c', n, 3), at('d', 1, 1)), e(at('c', n, 4), at('d', 1, 2));
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            const Literal& l = inst.clauses[j - 1][k - 1];
            const bool to_f = l.positive == (opt.polarity == Polarity::positive_to_f);
            const char kind = to_f ? 'f' : 't';
            const int z = at('z', j, k);
            e(z, at(kind, l.var + 1, 1));
            e(z, at(kind, l.var + 1, 3));
        }
    b.set_labels(labels);
    lay.graph = std::move(b).build();
    return lay;
}

// G' : adds a and b, each adjacent to u and s only.
inline BienstockLayout augment_prime(const BienstockLayout& lay) {
    if (lay.augmented) throw PreconditionError("gadget graph is already augmented");
    const Graph& g = lay.graph;
    const int n = g.vertex_count();
    GraphBuilder b(n + 2);
    for (auto [x, y] : g.edges()) b.add_edge(x, y);
    const int u = lay.vertex("u"), s = lay.vertex("s");
    b.add_edge(n, u), b.add_edge(n, s), b.add_edge(n + 1, u), b.add_edge(n + 1, s);
    std::vector<std::string> labels = g.labels();
    labels.push_back("a");
    labels.push_back("b");
    b.set_labels(labels);
    BienstockLayout out = lay;
    out.graph = std::move(b).build();
    out.index["a"] = n;
    out.index["b"] = n + 1;
    out.augmented = true;
    return out;
}

struct GadgetAudit {
    bool ok = true;
    std::vector<std::string> problems;
    explicit operator bool() const noexcept { return ok; }
};

// Counts, per-gadget edge lists and the z wiring rules.
inline GadgetAudit audit_bienstock(const BienstockLayout& lay, const Sat3Instance& inst) {
    GadgetAudit r;
    auto fail = [&](std::string why) {
        r.ok = false;
        r.problems.push_back(std::move(why));
    };
    const Graph& g = lay.graph;
    const int n = lay.n_vars, m = lay.n_clauses;
    const int extra_v = lay.augmented ? 2 : 0, extra_e = (lay.augmented ? 4 : 0) + (lay.options.link_alpha_beta ? 2 : 0);
    if (g.vertex_count() != 12 * n + 8 * m + 4 + extra_v) fail("vertex count");
    if (g.edge_count() != 19 * n + 16 * m + 1 + extra_e) fail("edge count");
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);  // alpha index of t/f/c vertices
    for (const auto& [label, v] : lay.index) {
        if (v < 0 || v >= g.vertex_count()) fail("label " + label + " out of range");
        else if (label[0] == 't' || label[0] == 'f' || label[0] == 'c') owner[v] = std::stoi(label.substr(2));
    }
    if (lay.index.size() != static_cast<std::size_t>(g.vertex_count())) fail("not every vertex has one label");
    for (int i = 1; i <= n; ++i) {
        VertexSet alpha(g.vertex_count());
        for (char kind : {'t', 'f', 'c'})
            for (int k = 1; k <= 4; ++k) alpha.insert(lay.vertex(detail::gadget_label(kind, i, k)));
        int inside = 0;
        for (int x : alpha) inside += (g.neighbors(x) & alpha).size();
        if (inside / 2 != 17) fail("alpha_" + std::to_string(i) + " does not have 17 edges");
    }
    for (int j = 1; j <= m; ++j) {
        VertexSet beta(g.vertex_count());
        for (int k = 1; k <= 4; ++k) beta.insert(lay.vertex(detail::gadget_label('d', j, k)));
        beta.insert(lay.vertex("r_" + std::to_string(j)));
        for (int k = 1; k <= 3; ++k) beta.insert(lay.vertex(detail::gadget_label('z', j, k)));
        int inside = 0;
        for (int x : beta) inside += (g.neighbors(x) & beta).size();
        if (inside / 2 != 8) fail("beta_" + std::to_string(j) + " does not have 8 edges");
        std::array<int, 3> alphas{};
        for (int k = 1; k <= 3; ++k) {
            const int z = lay.vertex(detail::gadget_label('z', j, k));
            VertexSet out = g.neighbors(z) - beta;
            auto nb = out.to_vector();
            if (nb.size() != 2) {
                fail("z_" + std::to_string(j) + "_" + std::to_string(k) + " does not have 2 outside edges");
                continue;
            }
            const int i = owner[nb[0]];
            const auto& l1 = g.label(nb[0]);
            const auto& l2 = g.label(nb[1]);
            const bool tpair = l1 == detail::gadget_label('t', i, 1) && l2 == detail::gadget_label('t', i, 3);
            const bool fpair = l1 == detail::gadget_label('f', i, 1) && l2 == detail::gadget_label('f', i, 3);
            if (i < 0 || (!tpair && !fpair))
                fail("z_" + std::to_string(j) + "_" + std::to_string(k) + " is not wired to a t-pair or f-pair");
            alphas[k - 1] = i;
            const Literal& lit = inst.clauses[j - 1][k - 1];
            const bool want_f = lit.positive == (lay.options.polarity == Polarity::positive_to_f);
            if (i != lit.var + 1 || fpair != want_f)
                fail("z_" + std::to_string(j) + "_" + std::to_string(k) + " does not follow its literal");
        }
        if (alphas[0] == alphas[1] || alphas[0] == alphas[2] || alphas[1] == alphas[2])
            fail("beta_" + std::to_string(j) + " attaches two z vertices to one alpha");
    }
    return r;
}

inline PathSearch odd_us_path(const BienstockLayout& lay, std::uint64_t budget = default_budget) {
    if (lay.augmented) throw PreconditionError("odd_us_path runs on the graph before augmentation");
    return find_odd_induced_path(lay.graph, lay.vertex("u"), lay.vertex("s"), budget);
}

struct CrossValidation {
    bool sat = false;
    std::optional<std::vector<bool>> assignment;
    bool odd_path = false;
    std::optional<InducedPath> path;
    bool bsp_gprime = false;            // through the lemma: no odd u-s path
    std::optional<VertexSet> witness;   // {a,u,s} when bsp_gprime
    bool triples_skew = false;          // {a,u,s} and {b,u,s} are skew cutsets of G'
    bool triples_balanced = false;      // verify_balanced on both triples
    bool audit_ok = false;
    std::uint64_t search_nodes = 0;
    std::vector<std::string> broken;    // legs that failed
    bool ok() const noexcept { return broken.empty(); }
};

inline CrossValidation cross_validate(const Sat3Instance& inst, const GadgetOptions& opt = {},
                                      std::uint64_t budget = default_budget) {
    CrossValidation r;
    r.assignment = sat_bruteforce(inst);
    r.sat = r.assignment.has_value();
    BienstockLayout lay = build_bienstock(inst, opt);
    GadgetAudit audit = audit_bienstock(lay, inst);
    r.audit_ok = audit.ok;
    if (!audit.ok) r.broken.push_back("structural audit");
    PathSearch p = odd_us_path(lay, budget);
    r.search_nodes += p.result.nodes;
    if (p.result.exhausted()) throw BudgetExhausted("odd u-s path search ran out of budget");
    r.odd_path = p.found();
    r.path = p.path;
    r.bsp_gprime = !r.odd_path;

    BienstockLayout prime = augment_prime(lay);
    const Graph& gp = prime.graph;
    const int a = prime.vertex("a"), b = prime.vertex("b"), u = prime.vertex("u"), s = prime.vertex("s");
    r.triples_skew = true;
    r.triples_balanced = true;
    for (int x : {a, b}) {
        VertexSet t(gp.vertex_count(), {x, u, s});
        VertexSet rest = gp.vertices() - t;
        if (!verify_skew_partition(gp, rest, t).skew) r.triples_skew = false;
        BalanceVerdict bal = verify_balanced(gp, rest, t, budget);
        if (!bal.decided) throw BudgetExhausted("balancedness check ran out of budget");
        if (!bal.balanced) r.triples_balanced = false;
    }
    if (r.bsp_gprime) r.witness = VertexSet(gp.vertex_count(), {a, u, s});
    if (r.sat != r.odd_path) r.broken.push_back("SAT <=> odd u-s path");
    if (!r.triples_skew) r.broken.push_back("triples are skew cutsets of G'");
    if (r.triples_balanced != r.bsp_gprime) r.broken.push_back("balanced triples <=> no odd u-s path");
    return r;
}

}  // namespace bsp

#endif
