#ifndef BSP_PARTITION_HPP
#define BSP_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "paths.hpp"
#include "recognize.hpp"

namespace bsp {

inline constexpr int default_size_guard = 14;

// A1,A2 anticomplete and non-empty; B1,B2 complete and non-empty
struct SkewSplit {
    VertexSet a1, a2, b1, b2;
};

struct SkewVerdict {
    bool skew = false;
    std::string reason;  // why not, when not skew
    std::optional<SkewSplit> split;
};

inline void require_partition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.capacity() != g.vertex_count() || b.capacity() != g.vertex_count())
        throw InputError("vertex set does not match the graph");
    if (a.intersects(b) || !((a | b) == g.vertices())) throw InputError("A and B do not partition the vertex set");
}

inline SkewVerdict verify_skew_partition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require_partition(g, a, b);
    auto comps = components_of(g, a);
    if (comps.size() < 2) return {false, "A induces a connected graph", std::nullopt};
    auto anti = anticomponents(g, b);
    if (anti.size() < 2) return {false, "B induces an anticonnected graph", std::nullopt};
    SkewSplit s{comps[0], a - comps[0], anti[0], b - anti[0]};
    return {true, "", s};
}

struct BalanceVerdict {
    bool balanced = true;
    bool decided = true;
    std::optional<InducedPath> witness;
    bool witness_is_antipath = false;
};

// Odd paths with ends in B and interior in A, odd antipaths with ends in A
// and interior in B, both of length at least 2.
inline BalanceVerdict verify_balanced(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      std::uint64_t budget = default_budget) {
    require_partition(g, a, b);
    BalanceVerdict v;
    PathSearch p = find_induced_path(g, PathQuery{b, a, Parity::odd, 2, budget});
    if (p.found()) return {false, true, p.path, false};
    std::uint64_t left = budget > p.result.nodes ? budget - p.result.nodes : 1;
    PathSearch q = find_induced_path(g.complement(), PathQuery{a, b, Parity::odd, 2, left});
    if (q.found()) return {false, true, q.path, true};
    v.decided = !(p.result.exhausted() || q.result.exhausted());
    return v;
}

// ---- star cutsets ---------------------------------------------------------

struct StarCutset {
    int center = -1;
    VertexSet cutset;
};

inline bool is_cutset(const Graph& g, const VertexSet& c) { return components(g, c).size() >= 2; }

namespace detail {

// some C with v in C, C inside N[v], G - C disconnected
inline std::optional<VertexSet> star_cutset_at(const Graph& g, int v) {
    const VertexSet closed = g.closed_neighbors(v);
    const VertexSet rest = g.vertices() - closed;
    auto comps = components_of(g, rest);
    if (comps.size() >= 2) return closed;
    if (comps.size() == 1) {
        VertexSet touch = neighborhood_of(g, comps[0]);
        for (int w : g.neighbors(v))
            if (!touch.contains(w)) {
                VertexSet c = closed;
                c.erase(w);
                return c;
            }
        return std::nullopt;
    }
    // v is universal: need two non-adjacent vertices besides v
    for (int x : g.neighbors(v)) {
        VertexSet miss = g.neighbors(v) - g.closed_neighbors(x);
        if (!miss.empty()) {
            VertexSet c = closed;
            c.erase(x);
            c.erase(miss.first());
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Centres are tried in ascending order; the cutset found is then shrunk
// greedily (ascending) while it still disconnects the graph.
inline std::optional<StarCutset> find_star_cutset(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto c = detail::star_cutset_at(g, v);
        if (!c) continue;
        VertexSet cut = *c;
        for (int w : *c) {
            if (w == v) continue;
            VertexSet smaller = cut;
            smaller.erase(w);
            if (is_cutset(g, smaller)) cut = smaller;
        }
        return StarCutset{v, cut};
    }
    return std::nullopt;
}

// ---- brute-force oracle ---------------------------------------------------

struct SkewPartitionCandidate {
    VertexSet a, b;
    SkewSplit split;
    std::optional<BalanceVerdict> balance;
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> m(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) m[v] |= Mask{1} << w;
    return m;
}

// true when G[s] has at least two components (s non-empty)
inline bool mask_disconnected(const std::vector<Mask>& adj, Mask s) {
    if (!s) return false;
    Mask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
        Mask nxt = 0;
        for (Mask f = frontier; f; f &= f - 1) nxt |= adj[std::countr_zero(f)];
        nxt &= s & ~seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen != s;
}

inline bool mask_not_anticonnected(const std::vector<Mask>& adj, Mask s) {
    if (!s) return false;
    Mask seen = s & (~s + 1), frontier = seen;
    while (frontier) {
        Mask nxt = 0;
        for (Mask f = frontier; f; f &= f - 1) {
            int v = std::countr_zero(f);
            nxt |= s & ~adj[v] & ~(Mask{1} << v);
        }
        nxt &= ~seen;
        seen |= nxt;
        frontier = nxt;
    }
    return seen != s;
}

inline VertexSet from_mask(int n, Mask m) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

// Visits every skew cutset B in lexicographic order of sorted members.
template <class Visit>
void for_each_skew_cutset(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    bool stop = false;
    auto rec = [&](auto&& self, Mask b, int from) -> void {
        if (stop) return;
        if (b && mask_not_anticonnected(adj, b) && mask_disconnected(adj, all & ~b)) {
            if (!visit(b)) {
                stop = true;
                return;
            }
        }
        for (int v = from; v < n && !stop; ++v) self(self, b | (Mask{1} << v), v + 1);
    };
    rec(rec, 0, 0);
}

inline void check_guard(const Graph& g, int guard, const char* what) {
    if (guard > 63) guard = 63;
    if (g.vertex_count() > guard) throw GuardExceeded(what, g.vertex_count(), guard);
}

}  // namespace detail

// First (A,B) in lexicographic order of B that is a skew partition and,
// when asked, balanced.
inline std::optional<SkewPartitionCandidate> bruteforce_skew_partition(const Graph& g, bool require_balanced,
                                                                       int size_guard = default_size_guard) {
    detail::check_guard(g, size_guard, "bruteforce_skew_partition");
    const int n = g.vertex_count();
    std::optional<SkewPartitionCandidate> out;
    detail::for_each_skew_cutset(g, [&](detail::Mask bm) {
        VertexSet b = detail::from_mask(n, bm);
        VertexSet a = g.vertices() - b;
        std::optional<BalanceVerdict> bal;
        if (require_balanced) {
            bal = verify_balanced(g, a, b);
            if (!bal->decided) throw BudgetExhausted("balancedness undecided inside the oracle");
            if (!bal->balanced) return true;
        }
        out = SkewPartitionCandidate{a, b, *verify_skew_partition(g, a, b).split, bal};
        return false;
    });
    return out;
}

// Every skew cutset B, lexicographic order.
inline std::vector<VertexSet> all_skew_cutsets(const Graph& g, int size_guard = default_size_guard) {
    detail::check_guard(g, size_guard, "all_skew_cutsets");
    std::vector<VertexSet> out;
    detail::for_each_skew_cutset(g, [&](detail::Mask b) {
        out.push_back(detail::from_mask(g.vertex_count(), b));
        return true;
    });
    return out;
}

inline bool has_bsp_bruteforce(const Graph& g, int size_guard = default_size_guard) {
    return bruteforce_skew_partition(g, true, size_guard).has_value();
}

// ---- basic classes --------------------------------------------------------

struct BspAnswer {
    bool has_bsp = false;
    std::optional<VertexSet> witness;  // a balanced skew cutset B, when one was produced
};

// In a bipartite graph a skew cutset is a complete bipartite set with both
// sides non-empty. Every such set lies in a maximal biclique M, and the
// subsets of M that disconnect G are read off the components of G - M.
inline BspAnswer bipartite_bsp(const Graph& g) {
    BipartiteResult col = is_bipartite(g);
    if (!col.bipartite) throw PreconditionError("bipartite_bsp needs a bipartite graph");
    const VertexSet& left = col.sides[0];

    // closed right-hand sides: all non-empty intersections of N(l), l in left
    std::unordered_set<VertexSet, VertexSetHash> closed;
    std::vector<VertexSet> order;
    for (int l : left) {
        if (g.neighbors(l).empty()) continue;
        std::vector<VertexSet> fresh{g.neighbors(l)};
        for (const VertexSet& y : order) {
            VertexSet z = y & g.neighbors(l);
            if (!z.empty()) fresh.push_back(z);
        }
        for (auto& z : fresh)
            if (closed.insert(z).second) order.push_back(z);
    }

    std::optional<VertexSet> best;
    auto offer = [&](const VertexSet& b) {
        if (!best || lex_less(b, *best)) best = b;
    };
    for (const VertexSet& y : order) {
        VertexSet x = g.vertices();
        for (int v : y) x &= g.neighbors(v);
        const VertexSet m = x | y;
        auto comps = components(g, m);
        if (comps.size() >= 2) {
            offer(m);
        } else if (comps.size() == 1) {
            VertexSet touch = neighborhood_of(g, comps[0]);
            for (int w : m) {
                const VertexSet& side = x.contains(w) ? x : y;
                if (!touch.contains(w) && side.size() >= 2) {
                    VertexSet b = m;
                    b.erase(w);
                    offer(b);
                }
            }
        } else {
            for (const VertexSet* side : {static_cast<const VertexSet*>(&x), static_cast<const VertexSet*>(&y)}) {
                if (side->size() < 3) continue;
                auto mem = side->to_vector();
                VertexSet b = m;
                b.erase(mem[mem.size() - 1]);
                b.erase(mem[mem.size() - 2]);
                offer(b);
            }
        }
    }
    if (!best) return {};
    return {true, best};
}

inline BspAnswer lgb_bsp(const Graph& g) {
    if (g.vertex_count() < 5 || g.edge_count() < 1)
        throw PreconditionError("lgb_bsp needs at least 5 vertices and one edge");
    if (!is_line_of_bipartite(g).line_of_bipartite)
        throw PreconditionError("lgb_bsp needs the line graph of a bipartite graph");
    auto s = find_star_cutset(g);
    if (!s) return {};
    BspAnswer a{true, std::nullopt};
    if (s->cutset.size() >= 2) a.witness = s->cutset;
    return a;
}

enum class LgbCutsetKind { star, square, neither };

struct LgbCutsetClass {
    LgbCutsetKind kind = LgbCutsetKind::neither;
    int center = -1;
};

inline LgbCutsetClass classify_lgb_skew_cutset(const Graph& g, const VertexSet& b) {
    if (find_claw(g) || find_diamond(g)) throw PreconditionError("graph must be claw-free and diamond-free");
    if (!verify_skew_partition(g, g.vertices() - b, b).skew) throw PreconditionError("B is not a skew cutset");
    for (int x : b)
        if ((b - g.closed_neighbors(x)).empty()) return {LgbCutsetKind::star, x};
    if (b.size() == 4) {
        bool square = true;
        for (int x : b)
            if ((g.neighbors(x) & b).size() != 2) square = false;
        if (square && is_connected_set(g, b)) return {LgbCutsetKind::square, -1};
    }
    return {};
}

inline BspAnswer double_split_bsp(const Graph& g) {
    if (!is_double_split(g)) throw PreconditionError("double_split_bsp needs a double split graph");
    return {};
}

inline BspAnswer basic_bsp(const Graph& g, const BasicVerdict& verdict) {
    auto lgb_or_oracle = [](const Graph& h) -> BspAnswer {
        if (h.vertex_count() >= 5 && h.edge_count() >= 1) return lgb_bsp(h);
        auto c = bruteforce_skew_partition(h, true);
        if (!c) return {};
        return {true, c->b};
    };
    switch (verdict.cls) {
        case BasicClass::bipartite: return bipartite_bsp(g);
        case BasicClass::cobipartite: {
            // (A,B) balanced in the complement iff (B,A) balanced in g
            BspAnswer a = bipartite_bsp(g.complement());
            if (a.witness) a.witness = g.vertices() - *a.witness;
            return a;
        }
        case BasicClass::line_of_bipartite: return lgb_or_oracle(g);
        case BasicClass::co_line_of_bipartite: {
            BspAnswer a = lgb_or_oracle(g.complement());
            if (a.witness) a.witness = g.vertices() - *a.witness;
            return a;
        }
        case BasicClass::double_split: return double_split_bsp(g);
        case BasicClass::none: break;
    }
    throw PreconditionError("basic_bsp called on a graph that is not basic");
}

}  // namespace bsp

#endif
