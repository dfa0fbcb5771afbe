#ifndef BSP_DECOMPOSE_HPP
#define BSP_DECOMPOSE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "partition.hpp"
#include "paths.hpp"
#include "recognize.hpp"
#include "twojoin.hpp"

namespace bsp {

// ---- checks and potentials ------------------------------------------------

inline constexpr int small_graph_threshold = 10;
inline constexpr std::size_t default_check_guard = 2000;

struct CheckVerdict {
    bool check = false;
    int failing_bullet = 0;       // 1..5, the furthest any naming got; 0 when a check
    std::array<int, 4> naming{};  // a, b, c, d when a check
    explicit operator bool() const noexcept { return check; }
};

namespace detail {

// 0 when (a,b,c,d) satisfies every bullet, else the first failing one
inline int check_bullets(const Graph& g, int a, int b, int c, int d) {
    auto e = [&](int x, int y) { return g.adjacent(x, y); };
    const bool square = e(a, b) && e(b, d) && e(d, c) && e(c, a) && !e(a, d) && !e(b, c);
    const bool crossed = e(a, d) && e(b, c) && !e(a, b) && !e(b, d) && !e(d, c) && !e(c, a);
    if (!square && !crossed) return 1;
    const VertexSet q(g.vertex_count(), {a, b, c, d});
    if (!((g.neighbors(a) - q) == (g.neighbors(b) - q))) return 2;
    if (!((g.neighbors(c) - q) == (g.neighbors(d) - q))) return 3;
    const VertexSet ab = (g.neighbors(a) & g.neighbors(b)) - g.neighbors(c) - g.neighbors(d) - q;
    if (ab.empty()) return 4;
    const VertexSet cd = (g.neighbors(c) & g.neighbors(d)) - g.neighbors(a) - g.neighbors(b) - q;
    if (cd.empty()) return 5;
    return 0;
}

}  // namespace detail

// A witness vertex for bullets 4 and 5 lies outside the quadruple: inside it
// no vertex can see both a, b while missing both c, d under either pattern.
inline CheckVerdict is_check(const Graph& g, const std::array<int, 4>& quad) {
    std::array<int, 4> p = quad;
    std::sort(p.begin(), p.end());
    for (int i = 0; i < 4; ++i) {
        if (p[i] < 0 || p[i] >= g.vertex_count()) throw InputError("check vertex out of range");
        if (i && p[i] == p[i - 1]) throw InputError("check needs four distinct vertices");
    }
    CheckVerdict out;
    out.failing_bullet = 1;
    do {
        int f = detail::check_bullets(g, p[0], p[1], p[2], p[3]);
        if (f == 0) return {true, 0, p};
        out.failing_bullet = std::max(out.failing_bullet, f);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Every check as a sorted quadruple, in lexicographic order.
inline std::vector<std::array<int, 4>> enumerate_checks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::array<int, 4>> out;
    // a,b (and c,d) are twins off the quadruple, so N(a) xor N(b) lies inside it
    std::vector<std::pair<int, int>> twins;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            VertexSet diff = g.neighbors(a) ^ g.neighbors(b);
            diff.erase(a);
            diff.erase(b);
            if (diff.size() <= 2) twins.emplace_back(a, b);
        }
    for (std::size_t i = 0; i < twins.size(); ++i)
        for (std::size_t j = i + 1; j < twins.size(); ++j) {
            auto [a, b] = twins[i];
            auto [c, d] = twins[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (detail::check_bullets(g, a, b, c, d) == 0 || detail::check_bullets(g, a, b, d, c) == 0) {
                std::array<int, 4> q{a, b, c, d};
                std::sort(q.begin(), q.end());
                out.push_back(q);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Maximum number of pairwise disjoint checks.
inline int count_checks(const Graph& g, std::size_t guard = default_check_guard) {
    const auto checks = enumerate_checks(g);
    if (checks.size() > guard) throw GuardExceeded("count_checks", static_cast<int>(checks.size()), static_cast<int>(guard));
    const int n = g.vertex_count();
    std::vector<VertexSet> sets;
    for (const auto& q : checks) sets.emplace_back(n, std::initializer_list<int>{q[0], q[1], q[2], q[3]});
    int best = 0;
    auto rec = [&](auto&& self, std::size_t from, const VertexSet& used, int count) -> void {
        best = std::max(best, count);
        const int room = (n - used.size()) / 4;
        if (count + room <= best) return;
        for (std::size_t i = from; i < sets.size(); ++i) {
            if (sets[i].intersects(used)) continue;
            self(self, i + 1, used | sets[i], count + 1);
        }
    };
    rec(rec, 0, VertexSet(n), 0);
    return best;
}

struct Potentials {
    int c = 0;
    int psi = 0;
    int phi = 1;
    friend bool operator==(const Potentials&, const Potentials&) = default;
};

inline Potentials potentials_from(int n, int c) {
    Potentials p{c, 2 * n - 20 + c, 0};
    p.phi = std::max(p.psi, 1);
    return p;
}

inline Potentials potentials(const Graph& g, std::size_t guard = default_check_guard) {
    return potentials_from(g.vertex_count(), count_checks(g, guard));
}

// ---- decomposition tree -----------------------------------------------------

enum class NodeLabel { internal, basic, small, no_decomposition, degenerate };

inline const char* to_string(NodeLabel l) {
    switch (l) {
        case NodeLabel::internal: return "internal";
        case NodeLabel::basic: return "basic";
        case NodeLabel::small: return "small";
        case NodeLabel::no_decomposition: return "no_decomposition";
        case NodeLabel::degenerate: return "degenerate";
    }
    return "internal";
}

struct DecompNode {
    explicit DecompNode(Graph g = {}) : graph(std::move(g)) {}
    Graph graph;
    NodeLabel label = NodeLabel::internal;
    bool complemented = false;  // the 2-join used lives in the complement of graph
    std::optional<TwoJoinSplit> split;  // in graph, or in its complement when complemented
    BasicClass basic_class = BasicClass::none;
    std::array<int, 2> children{-1, -1};
    std::optional<Potentials> potentials;
    std::optional<bool> answer;  // leaves only, after detection
    bool leaf() const noexcept { return label != NodeLabel::internal; }
};

struct DecompTree {
    std::vector<DecompNode> nodes;  // nodes[0] is the root, children follow parents
    std::uint64_t search_nodes = 0; // 2-join search effort, for reports
    const DecompNode& root() const { return nodes.front(); }
    std::size_t size() const noexcept { return nodes.size(); }
};

struct TreeOptions {
    std::uint64_t budget = default_budget;
    bool with_potentials = true;
    std::size_t check_guard = default_check_guard;
    std::size_t max_nodes = 100000;
};

struct ChosenTwoJoin {
    ClassifiedSplit cs;
    bool complemented = false;
};

// A substantial path 2-join: the path-side is a flat path of length >= 3.
inline std::optional<ClassifiedSplit> find_substantial_path_2join(const Graph& g) {
    if (is_cycle_graph(g)) {
        auto cuts = find_path_2joins(g);
        for (auto& c : cuts)
            if (c.cls.substantial) return c;
        return std::nullopt;
    }
    for (const InducedPath& p : all_flat_paths(g, 3, g.vertex_count())) {
        auto s = split_from_partition(g, VertexSet::from(g.vertex_count(), p.vertices));
        if (!s) continue;
        TwoJoinClass k = classify_2join(g, *s);
        if (k.substantial && k.is_path()) return ClassifiedSplit{*s, k, true};
    }
    return std::nullopt;
}

// non-path before path, the graph before its complement, least seed within
inline std::optional<ChosenTwoJoin> choose_2join(const Graph& g, std::uint64_t budget, std::uint64_t& effort) {
    const Graph co = g.complement();
    for (int which = 0; which < 2; ++which) {
        TwoJoinSearch r = find_nonpath_substantial_2join(which ? co : g, budget);
        effort += r.result.nodes;
        if (r.result.exhausted()) throw BudgetExhausted("2-join search ran out of budget");
        if (r.found) return ChosenTwoJoin{*r.found, which == 1};
    }
    for (int which = 0; which < 2; ++which)
        if (auto p = find_substantial_path_2join(which ? co : g)) return ChosenTwoJoin{*p, which == 1};
    return std::nullopt;
}

// |X2| <= |X1|, then the |X2| = 4 move of an {a, b} component of G[X1].
inline TwoJoinSplit orient_for_blocks(const Graph& h, TwoJoinSplit s) {
    if (s.x2.size() > s.x1.size()) s = s.swapped();
    if (s.x2.size() != 4) return s;
    for (int a : s.a1)
        for (int b : s.b1) {
            VertexSet ab(h.vertex_count(), {a, b});
            if (!h.adjacent(a, b)) continue;
            if (!(neighborhood_of(h, ab) & s.x1).empty()) continue;
            auto moved = split_from_partition(h, s.x1 - ab);
            if (!moved) throw PreconditionError("moving a component of X1 did not leave a 2-join");
            return *moved;
        }
    return s;
}

inline DecompTree build_decomposition_tree(const Graph& g, const TreeOptions& opt = {}) {
    DecompTree t;
    t.nodes.push_back(DecompNode{g});
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        if (t.nodes.size() > opt.max_nodes) throw BudgetExhausted("decomposition tree grew past its node limit");
        // copy: push_back below may reallocate
        const Graph f = t.nodes[i].graph;
        if (opt.with_potentials) t.nodes[i].potentials = potentials(f, opt.check_guard);
        BasicVerdict bv = is_basic(f, opt.budget);
        if (!bv.decided) throw BudgetExhausted("basic class recognition ran out of budget");
        if (bv.is_basic()) {
            t.nodes[i].label = NodeLabel::basic;
            t.nodes[i].basic_class = bv.cls;
            continue;
        }
        if (f.vertex_count() <= small_graph_threshold) {
            t.nodes[i].label = NodeLabel::small;
            continue;
        }
        auto chosen = choose_2join(f, opt.budget, t.search_nodes);
        if (!chosen) {
            t.nodes[i].label = NodeLabel::no_decomposition;
            continue;
        }
        t.nodes[i].complemented = chosen->complemented;
        if (chosen->cs.cls.degenerate()) {
            t.nodes[i].label = NodeLabel::degenerate;
            t.nodes[i].split = chosen->cs.split;
            continue;
        }
        const Graph h = chosen->complemented ? f.complement() : f;
        TwoJoinSplit s = orient_for_blocks(h, chosen->cs.split);
        t.nodes[i].split = s;
        Blocks blocks = build_blocks(h, s);
        const int first = static_cast<int>(t.nodes.size());
        t.nodes[i].children = {first, first + 1};
        t.nodes.push_back(DecompNode{std::move(blocks.g1.graph)});
        t.nodes.push_back(DecompNode{std::move(blocks.g2.graph)});
    }
    return t;
}

// Lemma check at every internal node, plus |T| <= 2 phi(root).
struct CountingReport {
    bool holds = true;
    int violating_node = -1;
    std::size_t nodes = 0;
    int root_phi = 0;
    explicit operator bool() const noexcept { return holds; }
};

inline CountingReport verify_counting(const DecompTree& t) {
    CountingReport r;
    r.nodes = t.size();
    for (const DecompNode& node : t.nodes)
        if (!node.potentials) throw PreconditionError("verify_counting needs potentials at every node");
    r.root_phi = t.root().potentials->phi;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const DecompNode& node = t.nodes[i];
        if (node.leaf()) continue;
        int sum = t.nodes[node.children[0]].potentials->phi + t.nodes[node.children[1]].potentials->phi;
        if (node.potentials->phi < sum) {
            r.holds = false;
            r.violating_node = static_cast<int>(i);
            return r;
        }
    }
    if (static_cast<long long>(t.size()) > 2LL * r.root_phi) r.holds = false;
    return r;
}

// ---- detection ----------------------------------------------------------------

struct BspDetection {
    bool has_bsp = false;
    DecompTree tree;
};

inline bool leaf_answer(const DecompNode& node, std::uint64_t budget) {
    switch (node.label) {
        case NodeLabel::basic: {
            BasicVerdict v = is_basic(node.graph, budget);
            return basic_bsp(node.graph, v).has_bsp;
        }
        case NodeLabel::small: return bruteforce_skew_partition(node.graph, true).has_value();
        case NodeLabel::no_decomposition:
        case NodeLabel::degenerate: return true;
        case NodeLabel::internal: break;
    }
    throw PreconditionError("leaf_answer on an internal node");
}

// The input is trusted to be Berge.
inline BspDetection detect_bsp_berge(const Graph& g, const TreeOptions& opt = {}) {
    BspDetection d{false, build_decomposition_tree(g, opt)};
    for (DecompNode& node : d.tree.nodes) {
        if (!node.leaf()) continue;
        node.answer = leaf_answer(node, opt.budget);
        if (*node.answer) d.has_bsp = true;
    }
    return d;
}

// ---- composition --------------------------------------------------------------

struct Composition {
    Graph graph;
    std::vector<int> from_host;   // -1 for vertices of the piece
    std::vector<int> from_piece;  // -1 for vertices of the host
};

namespace detail {

inline void require_gluing_path(const Graph& g, const std::vector<int>& p, const char* who) {
    if (p.size() < 2 || !is_induced_path(g, p) || !is_flat(g, p))
        throw PreconditionError(std::string(who) + ": gluing path is not a flat path");
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (g.degree(p[i]) != 2) throw PreconditionError(std::string(who) + ": gluing path has a branching interior");
    const VertexSet on = VertexSet::from(g.vertex_count(), p);
    if ((g.neighbors(p.front()) - on).empty() || (g.neighbors(p.back()) - on).empty())
        throw PreconditionError(std::string(who) + ": a gluing path end has no outside neighbour");
}

}  // namespace detail

// Inverse of taking blocks: delete the flat path q of the host and r of the
// piece, then join what q.front() saw to what r.front() saw and likewise for
// the back ends. Host vertices come first, each side in ascending order.
inline Composition compose(const Graph& host, const std::vector<int>& q, const Graph& piece, const std::vector<int>& r) {
    detail::require_gluing_path(host, q, "host");
    detail::require_gluing_path(piece, r, "piece");
    const VertexSet qs = VertexSet::from(host.vertex_count(), q);
    const VertexSet rs = VertexSet::from(piece.vertex_count(), r);
    const VertexSet keep_h = host.vertices() - qs, keep_p = piece.vertices() - rs;
    Composition c;
    std::vector<int> idx_h(host.vertex_count(), -1), idx_p(piece.vertex_count(), -1);
    for (int v : keep_h) {
        idx_h[v] = static_cast<int>(c.from_host.size());
        c.from_host.push_back(v);
        c.from_piece.push_back(-1);
    }
    for (int v : keep_p) {
        idx_p[v] = static_cast<int>(c.from_host.size());
        c.from_host.push_back(-1);
        c.from_piece.push_back(v);
    }
    GraphBuilder b(static_cast<int>(c.from_host.size()));
    for (auto [u, v] : host.edges())
        if (idx_h[u] >= 0 && idx_h[v] >= 0) b.add_edge(idx_h[u], idx_h[v]);
    for (auto [u, v] : piece.edges())
        if (idx_p[u] >= 0 && idx_p[v] >= 0) b.add_edge(idx_p[u], idx_p[v]);
    for (int x : host.neighbors(q.front()) - qs)
        for (int y : piece.neighbors(r.front()) - rs) b.add_edge(idx_h[x], idx_p[y]);
    for (int x : host.neighbors(q.back()) - qs)
        for (int y : piece.neighbors(r.back()) - rs) b.add_edge(idx_h[x], idx_p[y]);
    c.graph = std::move(b).build();
    return c;
}

struct CheckedComposition {
    std::optional<Composition> result;  // empty when rejected
    BergeVerdict berge;
};

inline CheckedComposition compose_berge(const Graph& host, const std::vector<int>& q, const Graph& piece,
                                        const std::vector<int>& r, std::uint64_t budget = default_budget) {
    Composition c = compose(host, q, piece, r);
    CheckedComposition out{std::nullopt, is_berge_bruteforce(c.graph, budget)};
    if (out.berge.decided && out.berge.berge) out.result = std::move(c);
    return out;
}

struct ComposeRecipe {
    int min_vertices = 11;
    int max_vertices = 14;
    int max_steps = 6;
    int max_restarts = 200;
    bool allow_complement = true;
    std::uint64_t budget = default_budget;
};

namespace detail {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}
    // modulo of the raw engine output; unlike the std distributions it is
    // the same on every standard library
    int below(int k) { return static_cast<int>(e_() % static_cast<std::uint64_t>(k)); }
    bool chance(int num, int den) { return below(den) < num; }

  private:
    std::mt19937_64 e_;
};

inline Graph random_bipartite_piece(Rng& rng) {
    for (;;) {
        int p = 2 + rng.below(3), q = 2 + rng.below(3);
        GraphBuilder b(p + q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j)
                if (rng.chance(1, 2)) b.add_edge(i, p + j);
        Graph g = std::move(b).build();
        if (is_connected_set(g, g.vertices()) && g.edge_count() >= 3) return g;
    }
}

// basic Berge pieces
inline Graph random_piece(Rng& rng) {
    switch (rng.below(8)) {
        case 0: return families::cycle(6);
        case 1: return families::cycle(8);
        case 2: return families::double_split(2, 2);
        case 3: return families::prism();
        case 4: return families::complete_bipartite(2, 3);
        case 5: {
            // cube
            GraphBuilder b(8);
            for (int v = 0; v < 8; ++v)
                for (int bit = 1; bit < 8; bit <<= 1)
                    if (v < (v ^ bit)) b.add_edge(v, v ^ bit);
            return std::move(b).build();
        }
        case 6: return families::cycle(4);
        default: return random_bipartite_piece(rng);
    }
}

inline std::vector<std::vector<int>> gluing_paths(const Graph& g, int max_len) {
    std::vector<std::vector<int>> out;
    for (const InducedPath& p : all_flat_paths(g, 1, max_len)) {
        bool ok = true;
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
            if (g.degree(p.vertices[i]) != 2) ok = false;
        const VertexSet on = VertexSet::from(g.vertex_count(), p.vertices);
        if ((g.neighbors(p.front()) - on).empty() || (g.neighbors(p.back()) - on).empty()) ok = false;
        if (g.vertex_count() - static_cast<int>(p.vertices.size()) < 2) ok = false;
        if (ok) out.push_back(p.vertices);
    }
    return out;
}

}  // namespace detail

// Repeatedly glues random basic pieces along flat paths of equal parity and
// sometimes complements. Every accepted step is checked Berge. A run that
// stalls below min_vertices starts over from a fresh piece; after
// max_restarts the largest graph seen is returned.
inline Graph compose_random_berge(std::uint64_t seed, const ComposeRecipe& recipe = {}) {
    detail::Rng rng(seed);
    Graph best;
    for (int restart = 0; restart <= recipe.max_restarts; ++restart) {
        Graph g = detail::random_piece(rng);
        if (recipe.allow_complement && rng.chance(1, 4)) g = g.complement();
        for (int step = 0; step < recipe.max_steps && g.vertex_count() < recipe.min_vertices; ++step) {
            auto qs = detail::gluing_paths(g, 4);
            if (qs.empty()) {
                g = g.complement();
                continue;
            }
            for (int attempt = 0; attempt < 8; ++attempt) {
                const auto& q = qs[rng.below(static_cast<int>(qs.size()))];
                Graph piece = detail::random_piece(rng);
                if (recipe.allow_complement && rng.chance(1, 5)) piece = piece.complement();
                std::vector<std::vector<int>> rs;
                for (auto& r : detail::gluing_paths(piece, 4))
                    if (r.size() % 2 == q.size() % 2) rs.push_back(r);
                if (rs.empty()) continue;
                const auto& r = rs[rng.below(static_cast<int>(rs.size()))];
                int n = g.vertex_count() - static_cast<int>(q.size()) + piece.vertex_count() - static_cast<int>(r.size());
                if (n > recipe.max_vertices) continue;
                auto c = compose_berge(g, q, piece, r, recipe.budget);
                if (!c.result) continue;
                g = std::move(c.result->graph);
                if (recipe.allow_complement && rng.chance(1, 4)) g = g.complement();
                break;
            }
        }
        if (g.vertex_count() >= recipe.min_vertices) return g;
        if (g.vertex_count() > best.vertex_count()) best = std::move(g);
    }
    return best;
}

// ---- export -----------------------------------------------------------------

inline std::string to_dot(const DecompTree& t) {
    std::ostringstream os;
    os << "digraph decomposition {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        const DecompNode& nd = t.nodes[i];
        os << "  n" << i << " [label=\"#" << i << " " << to_string(nd.label);
        if (nd.label == NodeLabel::basic) os << " (" << to_string(nd.basic_class) << ")";
        os << "\\nn=" << nd.graph.vertex_count() << " m=" << nd.graph.edge_count();
        if (nd.complemented) os << "\\ncomplemented";
        if (nd.potentials) os << "\\nc=" << nd.potentials->c << " psi=" << nd.potentials->psi << " phi=" << nd.potentials->phi;
        if (nd.answer) os << "\\nanswer=" << (*nd.answer ? "YES" : "NO");
        os << "\"];\n";
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int c : t.nodes[i].children)
            if (c >= 0) os << "  n" << i << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bsp

#endif
