#ifndef BSP_RECOGNIZE_HPP
#define BSP_RECOGNIZE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "paths.hpp"

namespace bsp {

struct CheckReport {
    bool ok = true;
    std::string violation;  // empty when ok
    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

// ---- bipartite ------------------------------------------------------------

struct BipartiteResult {
    bool bipartite = true;
    std::array<VertexSet, 2> sides;  // colour classes when bipartite
    std::vector<int> odd_cycle;      // a closed walk without repeats otherwise
};

inline BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteResult r;
    r.sides = {VertexSet(n), VertexSet(n)};
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    // walk both ends up to their common ancestor
                    std::vector<int> left{v}, right{w};
                    int x = v, y = w;
                    while (depth[x] > depth[y]) left.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) right.push_back(y = parent[y]);
                    while (x != y) {
                        left.push_back(x = parent[x]);
                        right.push_back(y = parent[y]);
                    }
                    right.pop_back();
                    r.bipartite = false;
                    r.odd_cycle.assign(left.begin(), left.end());
                    r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
                    r.sides = {VertexSet(n), VertexSet(n)};
                    return r;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) r.sides[color[v]].insert(v);
    return r;
}

// ---- small forbidden subgraphs --------------------------------------------

// centre first, then three pairwise non-adjacent neighbours
inline std::optional<std::array<int, 4>> find_claw(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        const VertexSet& nb = g.neighbors(c);
        for (int x : nb)
            for (int y = nb.next(x); y >= 0; y = nb.next(y)) {
                if (g.adjacent(x, y)) continue;
                VertexSet rest = nb - g.neighbors(x) - g.neighbors(y);
                for (int z = rest.next(y); z >= 0; z = rest.next(z)) return std::array<int, 4>{c, x, y, z};
            }
    }
    return std::nullopt;
}

// the adjacent pair first, then the two non-adjacent common neighbours
inline std::optional<std::array<int, 4>> find_diamond(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        for (int x : common)
            for (int y = common.next(x); y >= 0; y = common.next(y))
                if (!g.adjacent(x, y)) return std::array<int, 4>{u, v, x, y};
    }
    return std::nullopt;
}

// ---- odd holes ------------------------------------------------------------

struct HoleSearch {
    std::optional<std::vector<int>> hole;  // cyclic vertex order
    SearchResult result;
    bool found() const noexcept { return hole.has_value(); }
    bool proven_absent() const noexcept { return !hole && !result.exhausted(); }
};

namespace detail {

// odd holes through `apex` using only vertices of `pool` besides it
inline bool odd_hole_at(const Graph& g, int apex, const VertexSet& pool, std::uint64_t budget, HoleSearch& out) {
    VertexSet nb = g.neighbors(apex) & pool;
    VertexSet inner = pool - g.closed_neighbors(apex);
    for (int a : nb)
        for (int b = nb.next(a); b >= 0; b = nb.next(b)) {
            if (g.adjacent(a, b)) continue;
            std::uint64_t left = budget > out.result.nodes ? budget - out.result.nodes : 0;
            if (left == 0) {
                out.result.status = SearchStatus::budget_exhausted;
                return false;
            }
            PathSearch ps = find_induced_path_between(g, a, b, Parity::odd, 3, inner, left);
            out.result.nodes += ps.result.nodes;
            if (ps.found()) {
                std::vector<int> h{apex};
                h.insert(h.end(), ps.path->vertices.begin(), ps.path->vertices.end());
                out.hole = std::move(h);
                return false;
            }
            if (ps.result.exhausted()) {
                out.result.status = SearchStatus::budget_exhausted;
                return false;
            }
        }
    return true;
}

}  // namespace detail

// An induced odd cycle of length >= 5; the first vertex is its smallest.
inline HoleSearch find_odd_hole_bruteforce(const Graph& g, std::uint64_t budget = default_budget) {
    HoleSearch out;
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        VertexSet pool(n);
        for (int v = s + 1; v < n; ++v) pool.insert(v);
        if (!detail::odd_hole_at(g, s, pool, budget, out)) break;
    }
    return out;
}

// Odd holes containing v; used when a graph grows by one vertex.
inline HoleSearch find_odd_hole_through(const Graph& g, int v, std::uint64_t budget = default_budget) {
    HoleSearch out;
    VertexSet pool = g.vertices();
    pool.erase(v);
    detail::odd_hole_at(g, v, pool, budget, out);
    return out;
}

struct BergeVerdict {
    bool berge = true;
    bool decided = true;            // false when a budget ran out first
    bool in_complement = false;     // witness is an odd antihole
    std::vector<int> witness;       // cyclic order in g or in its complement
};

inline BergeVerdict is_berge_bruteforce(const Graph& g, std::uint64_t budget = default_budget) {
    BergeVerdict v;
    HoleSearch h = find_odd_hole_bruteforce(g, budget);
    if (h.found()) return {false, true, false, *h.hole};
    bool exhausted = h.result.exhausted();
    HoleSearch a = find_odd_hole_bruteforce(g.complement(), budget);
    if (a.found()) return {false, true, true, *a.hole};
    v.decided = !(exhausted || a.result.exhausted());
    return v;
}

// ---- line graphs of bipartite graphs --------------------------------------

enum class LgbObstruction { none, claw, diamond, odd_hole, undecided };

struct LgbVerdict {
    bool line_of_bipartite = true;
    LgbObstruction obstruction = LgbObstruction::none;
    std::vector<int> witness;
};

inline LgbVerdict is_line_of_bipartite(const Graph& g, std::uint64_t budget = default_budget) {
    if (auto c = find_claw(g)) return {false, LgbObstruction::claw, {c->begin(), c->end()}};
    if (auto d = find_diamond(g)) return {false, LgbObstruction::diamond, {d->begin(), d->end()}};
    HoleSearch h = find_odd_hole_bruteforce(g, budget);
    if (h.found()) return {false, LgbObstruction::odd_hole, *h.hole};
    if (h.result.exhausted()) return {false, LgbObstruction::undecided, {}};
    return {};
}

// ---- double split graphs --------------------------------------------------

struct DoubleSplit {
    int m = 0;  // matching edges a_i b_i
    int n = 0;  // antimatching non-edges c_j d_j
    std::vector<int> a, b, c, d;
};

namespace detail {

inline std::optional<DoubleSplit> double_split_with_low_side(const Graph& g, const VertexSet& low) {
    const VertexSet high = g.vertices() - low;
    DoubleSplit ds;
    for (int x : low) {
        VertexSet mate = g.neighbors(x) & low;
        if (mate.size() != 1) return std::nullopt;
        int y = mate.first();
        if (x < y) {
            ds.a.push_back(x);
            ds.b.push_back(y);
        }
    }
    for (int u : high) {
        VertexSet miss = high - g.neighbors(u);
        miss.erase(u);
        if (miss.size() != 1) return std::nullopt;
        int v = miss.first();
        if (u < v) {
            ds.c.push_back(u);
            ds.d.push_back(v);
        }
    }
    ds.m = static_cast<int>(ds.a.size());
    ds.n = static_cast<int>(ds.c.size());
    if (ds.m < 2 || ds.n < 2) return std::nullopt;
    for (int i = 0; i < ds.m; ++i)
        for (int j = 0; j < ds.n; ++j) {
            // {a,b,c,d} induces a P4: exactly two disjoint cross edges
            int x = ds.a[i], y = ds.b[i], u = ds.c[j], v = ds.d[j];
            bool straight = g.adjacent(x, u) && g.adjacent(y, v) && !g.adjacent(x, v) && !g.adjacent(y, u);
            bool crossed = g.adjacent(x, v) && g.adjacent(y, u) && !g.adjacent(x, u) && !g.adjacent(y, v);
            if (!straight && !crossed) return std::nullopt;
        }
    for (int x : low)
        if (g.degree(x) != 1 + ds.n) return std::nullopt;
    for (int u : high)
        if (g.degree(u) != 2 * ds.n - 2 + ds.m) return std::nullopt;
    return ds;
}

}  // namespace detail

inline std::optional<DoubleSplit> is_double_split(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 8) return std::nullopt;
    std::vector<int> degs;
    for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::vector<int> distinct = degs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != 2) return std::nullopt;
    // either value may be the matching side on degenerate inputs; try both
    for (int low_degree : distinct) {
        VertexSet low(n);
        for (int v = 0; v < n; ++v)
            if (degs[v] == low_degree) low.insert(v);
        if (auto ds = detail::double_split_with_low_side(g, low)) return ds;
    }
    return std::nullopt;
}

// ---- basic graphs ---------------------------------------------------------

enum class BasicClass { bipartite, cobipartite, line_of_bipartite, co_line_of_bipartite, double_split, none };

inline const char* to_string(BasicClass c) {
    switch (c) {
        case BasicClass::bipartite: return "bipartite";
        case BasicClass::cobipartite: return "cobipartite";
        case BasicClass::line_of_bipartite: return "line_of_bipartite";
        case BasicClass::co_line_of_bipartite: return "co_line_of_bipartite";
        case BasicClass::double_split: return "double_split";
        case BasicClass::none: return "none";
    }
    return "none";
}

inline BasicClass co_class(BasicClass c) {
    switch (c) {
        case BasicClass::bipartite: return BasicClass::cobipartite;
        case BasicClass::cobipartite: return BasicClass::bipartite;
        case BasicClass::line_of_bipartite: return BasicClass::co_line_of_bipartite;
        case BasicClass::co_line_of_bipartite: return BasicClass::line_of_bipartite;
        default: return c;
    }
}

struct BasicVerdict {
    BasicClass cls = BasicClass::none;
    bool decided = true;
    std::array<VertexSet, 2> coloring;      // bipartite / cobipartite (colouring of g or its complement)
    std::optional<DoubleSplit> double_split;
    bool is_basic() const noexcept { return cls != BasicClass::none; }
};

inline BasicVerdict is_basic(const Graph& g, std::uint64_t budget = default_budget) {
    BasicVerdict v;
    if (auto b = is_bipartite(g); b.bipartite) {
        v.cls = BasicClass::bipartite;
        v.coloring = b.sides;
        return v;
    }
    const Graph co = g.complement();
    if (auto b = is_bipartite(co); b.bipartite) {
        v.cls = BasicClass::cobipartite;
        v.coloring = b.sides;
        return v;
    }
    LgbVerdict l = is_line_of_bipartite(g, budget);
    if (l.line_of_bipartite) {
        v.cls = BasicClass::line_of_bipartite;
        return v;
    }
    bool undecided = l.obstruction == LgbObstruction::undecided;
    LgbVerdict cl = is_line_of_bipartite(co, budget);
    if (cl.line_of_bipartite) {
        v.cls = BasicClass::co_line_of_bipartite;
        return v;
    }
    undecided = undecided || cl.obstruction == LgbObstruction::undecided;
    if (auto ds = is_double_split(g)) {
        v.cls = BasicClass::double_split;
        v.double_split = ds;
        return v;
    }
    v.decided = !undecided;
    return v;
}

// Every class g belongs to, indexed by BasicClass (none excluded).
inline std::array<bool, 5> basic_memberships(const Graph& g, std::uint64_t budget = default_budget) {
    const Graph co = g.complement();
    return {is_bipartite(g).bipartite, is_bipartite(co).bipartite, is_line_of_bipartite(g, budget).line_of_bipartite,
            is_line_of_bipartite(co, budget).line_of_bipartite, is_double_split(g).has_value()};
}

// ---- certificate checkers -------------------------------------------------

namespace detail {

inline CheckReport check_partition(const Graph& g, std::initializer_list<const VertexSet*> parts) {
    VertexSet seen(g.vertex_count());
    for (const VertexSet* p : parts) {
        if (p->capacity() != g.vertex_count()) return CheckReport::fail("set does not match the graph size");
        if (p->intersects(seen)) return CheckReport::fail("sets are not disjoint");
        seen |= *p;
    }
    if (!(seen == g.vertices())) return CheckReport::fail("sets do not cover the vertex set");
    return CheckReport::pass();
}

// Paths from x to y whose interior lies in `inner`, where every vertex of
// `inner` has degree 2. Returns their lengths.
inline std::vector<int> chain_lengths(const Graph& g, int x, int y, const VertexSet& inner) {
    std::vector<int> out;
    if (g.adjacent(x, y)) out.push_back(1);
    for (int start : g.neighbors(x) & inner) {
        int prev = x, cur = start, len = 1;
        VertexSet seen(g.vertex_count(), {x});
        while (true) {
            seen.insert(cur);
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) nxt = w;
            ++len;
            if (nxt == y) {
                out.push_back(len);
                break;
            }
            if (nxt < 0 || !inner.contains(nxt) || seen.contains(nxt)) break;
            prev = cur;
            cur = nxt;
        }
    }
    return out;
}

}  // namespace detail

struct PathDoubleSplitParts {
    std::vector<int> a, b, c, d;  // a[i] pairs with b[i], c[j] with d[j]
    VertexSet e;
};

inline CheckReport verify_path_double_split(const Graph& g, const PathDoubleSplitParts& p) {
    const int n = g.vertex_count();
    if (p.a.size() != p.b.size() || p.c.size() != p.d.size())
        return CheckReport::fail("pairing: A/B or C/D sizes differ");
    const int m = static_cast<int>(p.a.size()), k = static_cast<int>(p.c.size());
    if (m < 2 || k < 2) return CheckReport::fail("need m >= 2 and n >= 2");
    VertexSet A = VertexSet::from(n, p.a), B = VertexSet::from(n, p.b), C = VertexSet::from(n, p.c),
              D = VertexSet::from(n, p.d);
    if (A.size() != m || B.size() != m || C.size() != k || D.size() != k) return CheckReport::fail("repeated vertex");
    if (auto r = detail::check_partition(g, {&A, &B, &C, &D, &p.e}); !r) return r;
    // bullet 1 (degrees first, the walk below relies on them)
    for (int x : p.e)
        if (g.degree(x) != 2) return CheckReport::fail("vertex " + std::to_string(x) + " of E has degree != 2");
    // bullet 2: odd unique a_i..b_i path through E, pairs mutually anticomplete
    VertexSet covered(n);
    for (int i = 0; i < m; ++i) {
        auto lens = detail::chain_lengths(g, p.a[i], p.b[i], p.e);
        if (lens.size() != 1) return CheckReport::fail("pair " + std::to_string(i) + ": path through E not unique");
        if (lens[0] % 2 == 0) return CheckReport::fail("pair " + std::to_string(i) + ": path through E has even length");
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            VertexSet other(n, {p.a[j], p.b[j]});
            if (g.neighbors(p.a[i]).intersects(other) || g.neighbors(p.b[i]).intersects(other))
                return CheckReport::fail("edge between matching pairs");
        }
    }
    // bullet 1: every vertex of E sits on one of those paths
    for (int i = 0; i < m; ++i) {
        VertexSet reach(n);
        VertexSet frontier = g.neighbors(p.a[i]) & p.e;
        while (!frontier.empty()) {
            reach |= frontier;
            VertexSet nxt(n);
            for (int v : frontier) nxt |= g.neighbors(v);
            frontier = (nxt & p.e) - reach;
        }
        covered |= reach;
    }
    if (!(covered == p.e)) return CheckReport::fail("some vertex of E is on no a_i..b_i path");
    // bullet 3: c_j d_j non-adjacent, all four edges between distinct pairs
    for (int j = 0; j < k; ++j) {
        if (g.adjacent(p.c[j], p.d[j])) return CheckReport::fail("c_j adjacent to d_j");
        for (int l = j + 1; l < k; ++l)
            for (int x : {p.c[j], p.d[j]})
                for (int y : {p.c[l], p.d[l]})
                    if (!g.adjacent(x, y)) return CheckReport::fail("missing edge between antimatching pairs");
    }
    // bullet 4: two disjoint edges between every matching pair and antimatching pair
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            int x = p.a[i], y = p.b[i], u = p.c[j], v = p.d[j];
            bool straight = g.adjacent(x, u) && g.adjacent(y, v) && !g.adjacent(x, v) && !g.adjacent(y, u);
            bool crossed = g.adjacent(x, v) && g.adjacent(y, u) && !g.adjacent(x, u) && !g.adjacent(y, v);
            if (!straight && !crossed) return CheckReport::fail("pair edges not exactly two disjoint edges");
        }
    return CheckReport::pass();
}

inline CheckReport verify_path_cobipartite(const Graph& g, const VertexSet& A, const VertexSet& B, const VertexSet& P) {
    if (auto r = detail::check_partition(g, {&A, &B, &P}); !r) return r;
    if (A.empty() || B.empty()) return CheckReport::fail("A and B must be non-empty");
    for (const VertexSet* s : {&A, &B})
        for (int v : *s)
            if (!(*s - g.closed_neighbors(v)).empty()) return CheckReport::fail("A or B is not a clique");
    for (int x : P)
        if (g.degree(x) != 2) return CheckReport::fail("vertex " + std::to_string(x) + " of P has degree != 2");
    for (const VertexSet& chain : components_of(g, P)) {
        VertexSet ends = neighborhood_of(g, chain);
        if (ends.size() != 2) return CheckReport::fail("a P-chain does not have two outside ends");
        int x = ends.first(), y = ends.next(x);
        if ((A.contains(x) == A.contains(y)) || !(A.contains(x) || A.contains(y)) || !(B.contains(x) || B.contains(y)))
            return CheckReport::fail("a P-chain does not join A to B");
        int len = chain.size() + 1;
        if (len % 2 == 0) return CheckReport::fail("a P-chain has even length");
        int a = A.contains(x) ? x : y, b = a == x ? y : x;
        if (!g.neighbors(a).is_subset_of(A | P)) return CheckReport::fail("a path end in A sees B");
        if (!g.neighbors(b).is_subset_of(B | P)) return CheckReport::fail("a path end in B sees A");
    }
    return CheckReport::pass();
}

struct HomogeneousSixTuple {
    VertexSet a, b, c, d, e, f;
};

inline CheckReport verify_homogeneous_pair(const Graph& g, const HomogeneousSixTuple& t) {
    for (const VertexSet* s : {&t.a, &t.b, &t.c, &t.d, &t.e, &t.f})
        if (s->empty()) throw PreconditionError("homogeneous tuple with an empty set");
    if (auto r = detail::check_partition(g, {&t.a, &t.b, &t.c, &t.d, &t.e, &t.f}); !r) return r;
    for (int x : t.a)
        if (!g.neighbors(x).intersects(t.b) || t.b.is_subset_of(g.neighbors(x)))
            return CheckReport::fail("a vertex of A lacks a neighbour or a non-neighbour in B");
    for (int x : t.b)
        if (!g.neighbors(x).intersects(t.a) || t.a.is_subset_of(g.neighbors(x)))
            return CheckReport::fail("a vertex of B lacks a neighbour or a non-neighbour in A");
    if (!is_complete_to(g, t.c, t.a)) return CheckReport::fail("C is not complete to A");
    if (!is_complete_to(g, t.a, t.f)) return CheckReport::fail("A is not complete to F");
    if (!is_complete_to(g, t.f, t.b)) return CheckReport::fail("F is not complete to B");
    if (!is_complete_to(g, t.b, t.d)) return CheckReport::fail("B is not complete to D");
    if (!is_anticomplete_to(g, t.d, t.a)) return CheckReport::fail("D is not anticomplete to A");
    if (!is_anticomplete_to(g, t.a, t.e)) return CheckReport::fail("A is not anticomplete to E");
    if (!is_anticomplete_to(g, t.e, t.b)) return CheckReport::fail("E is not anticomplete to B");
    if (!is_anticomplete_to(g, t.b, t.c)) return CheckReport::fail("B is not anticomplete to C");
    return CheckReport::pass();
}

struct DegenerateItems {
    bool item1 = false;
    bool item2 = false;
    bool any() const noexcept { return item1 || item2; }
};

inline DegenerateItems verify_degenerate_homogeneous_2join(const Graph& g, const HomogeneousSixTuple& t) {
    DegenerateItems r;
    for (int x : t.c) {
        if (!g.neighbors(x).intersects(t.e | t.d)) r.item1 = true;
        if (g.neighbors(x).is_subset_of(t.a | t.d | t.e)) r.item2 = true;
    }
    for (int y : t.d) {
        if (!g.neighbors(y).intersects(t.e | t.c)) r.item1 = true;
        if (g.neighbors(y).is_subset_of(t.b | t.c | t.e)) r.item2 = true;
    }
    return r;
}

}  // namespace bsp

#endif
