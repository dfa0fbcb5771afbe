#ifndef BSP_TWOJOIN_HPP
#define BSP_TWOJOIN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"
#include "paths.hpp"
#include "recognize.hpp"

namespace bsp {

inline constexpr int default_2join_guard = 12;

struct TwoJoinSplit {
    VertexSet x1, x2, a1, b1, a2, b2;
    VertexSet c1() const { return x1 - a1 - b1; }
    VertexSet c2() const { return x2 - a2 - b2; }
    // exchange the roles of X1 and X2
    TwoJoinSplit swapped() const { return {x2, x1, a2, b2, a1, b1}; }
    friend bool operator==(const TwoJoinSplit&, const TwoJoinSplit&) = default;
};

inline CheckReport verify_2join(const Graph& g, const TwoJoinSplit& s) {
    const int n = g.vertex_count();
    for (const VertexSet* p : {&s.x1, &s.x2, &s.a1, &s.b1, &s.a2, &s.b2})
        if (p->capacity() != n) return CheckReport::fail("set does not match the graph size");
    if (s.x1.intersects(s.x2) || !((s.x1 | s.x2) == g.vertices()))
        return CheckReport::fail("X1 and X2 do not partition V");
    if (!(s.a1 | s.b1).is_subset_of(s.x1) || !(s.a2 | s.b2).is_subset_of(s.x2))
        return CheckReport::fail("A_i or B_i is not inside X_i");
    if (s.a1.empty() || s.b1.empty() || s.a2.empty() || s.b2.empty())
        return CheckReport::fail("A_i and B_i must be non-empty");
    if (s.a1.intersects(s.b1) || s.a2.intersects(s.b2)) return CheckReport::fail("A_i and B_i must be disjoint");
    for (int v : s.x1) {
        VertexSet want = s.a1.contains(v) ? s.a2 : s.b1.contains(v) ? s.b2 : VertexSet(n);
        VertexSet have = g.neighbors(v) & s.x2;
        if (!(have == want)) {
            if (s.a1.contains(v) && !s.a2.is_subset_of(have))
                return CheckReport::fail("A1 is not complete to A2 at vertex " + std::to_string(v));
            if (s.b1.contains(v) && !s.b2.is_subset_of(have))
                return CheckReport::fail("B1 is not complete to B2 at vertex " + std::to_string(v));
            return CheckReport::fail("extra edge between X1 and X2 at vertex " + std::to_string(v));
        }
    }
    return CheckReport::pass();
}

// The split of the bipartition (X1, V - X1), if it is a 2-join. A1 holds the
// smallest vertex of X1 that has a neighbour across.
inline std::optional<TwoJoinSplit> split_from_partition(const Graph& g, const VertexSet& x1) {
    const VertexSet x2 = g.vertices() - x1;
    if (x1.size() < 2 || x2.size() < 2) return std::nullopt;
    std::vector<VertexSet> groups, cross;
    for (int v : x1) {
        VertexSet nb = g.neighbors(v) & x2;
        if (nb.empty()) continue;
        bool placed = false;
        for (std::size_t i = 0; i < cross.size(); ++i)
            if (cross[i] == nb) {
                groups[i].insert(v);
                placed = true;
            }
        if (!placed) {
            if (cross.size() == 2) return std::nullopt;
            cross.push_back(nb);
            groups.emplace_back(g.vertex_count(), std::initializer_list<int>{v});
        }
    }
    if (cross.size() != 2 || cross[0].intersects(cross[1])) return std::nullopt;
    TwoJoinSplit s{x1, x2, groups[0], groups[1], cross[0], cross[1]};
    if (!verify_2join(g, s)) return std::nullopt;
    return s;
}

enum class PathSide { none, x1, x2, both };
enum class JoinParity { odd, even, undefined };

inline const char* to_string(PathSide p) {
    switch (p) {
        case PathSide::none: return "none";
        case PathSide::x1: return "X1";
        case PathSide::x2: return "X2";
        case PathSide::both: return "both";
    }
    return "none";
}
inline const char* to_string(JoinParity p) {
    switch (p) {
        case JoinParity::odd: return "odd";
        case JoinParity::even: return "even";
        case JoinParity::undefined: return "undefined";
    }
    return "undefined";
}

struct TwoJoinClass {
    bool connected = false;
    bool substantial = false;
    bool proper = false;
    PathSide path_side = PathSide::none;
    JoinParity parity = JoinParity::undefined;
    std::vector<int> degenerate_items;  // subset of 1..5
    bool cutting1 = false;
    bool degenerate() const noexcept { return !degenerate_items.empty(); }
    bool is_path() const noexcept { return path_side != PathSide::none; }
};

namespace detail {

// G[x] is a path whose ends are the single vertices of a and b
inline bool is_path_side(const Graph& g, const VertexSet& x, const VertexSet& a, const VertexSet& b) {
    if (a.size() != 1 || b.size() != 1) return false;
    int edges = 0;
    for (int v : x) {
        int d = (g.neighbors(v) & x).size();
        if (d > 2) return false;
        bool end = a.contains(v) || b.contains(v);
        if (x.size() >= 2 && end != (d == 1)) return false;
        edges += d;
    }
    return edges / 2 == x.size() - 1 && is_connected_set(g, x);
}

inline bool side_connected(const Graph& g, const VertexSet& x, const VertexSet& a, const VertexSet& b) {
    for (const VertexSet& k : components_of(g, x))
        if (!k.intersects(a) || !k.intersects(b)) return false;
    return true;
}

inline bool side_substantial(const Graph& g, const VertexSet& x, const VertexSet& a, const VertexSet& b) {
    if (x.size() < 3) return false;
    return !(x.size() == 3 && is_path_side(g, x, a, b));
}

// length of a shortest path from a to b with interior in c, or -1
inline int shortest_through(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    VertexSet seen = a;
    VertexSet frontier = a;
    for (int len = 1; !frontier.empty(); ++len) {
        VertexSet nxt = neighborhood_of(g, frontier);
        if (nxt.intersects(b)) return len;
        nxt &= c;
        nxt -= seen;
        seen |= nxt;
        frontier = nxt;
    }
    return -1;
}

}  // namespace detail

inline TwoJoinClass classify_2join(const Graph& g, const TwoJoinSplit& s) {
    TwoJoinClass k;
    const bool conn1 = detail::side_connected(g, s.x1, s.a1, s.b1);
    const bool conn2 = detail::side_connected(g, s.x2, s.a2, s.b2);
    k.connected = conn1 && conn2;
    k.substantial =
        detail::side_substantial(g, s.x1, s.a1, s.b1) && detail::side_substantial(g, s.x2, s.a2, s.b2);
    k.proper = k.connected && k.substantial;
    const bool p1 = detail::is_path_side(g, s.x1, s.a1, s.b1);
    const bool p2 = detail::is_path_side(g, s.x2, s.a2, s.b2);
    k.path_side = p1 && p2 ? PathSide::both : p1 ? PathSide::x1 : p2 ? PathSide::x2 : PathSide::none;
    if (k.connected) {
        int len = detail::shortest_through(g, s.a1, s.b1, s.c1());
        if (len > 0) k.parity = len % 2 ? JoinParity::odd : JoinParity::even;
    }

    // degenerate items
    auto item1 = [&](const VertexSet& x, const VertexSet& a, const VertexSet& b) {
        for (int v : a)
            if (!g.neighbors(v).intersects(x - a)) return true;
        for (int v : b)
            if (!g.neighbors(v).intersects(x - b)) return true;
        return false;
    };
    if (item1(s.x1, s.a1, s.b1) || item1(s.x2, s.a2, s.b2)) k.degenerate_items.push_back(1);
    auto skew_cutset = [&](const VertexSet& b) { return verify_skew_partition(g, g.vertices() - b, b).skew; };
    if (skew_cutset(s.a1 | s.a2) || skew_cutset(s.b1 | s.b2)) k.degenerate_items.push_back(2);
    if (!k.connected) k.degenerate_items.push_back(3);
    auto item4 = [&](const VertexSet& a, const VertexSet& b) {
        for (int v : a)
            if (b.is_subset_of(g.neighbors(v))) return true;
        for (int v : b)
            if (a.is_subset_of(g.neighbors(v))) return true;
        return false;
    };
    if (item4(s.a1, s.b1) || item4(s.a2, s.b2)) k.degenerate_items.push_back(4);
    auto item5 = [&](const VertexSet& c, const VertexSet& ab) {
        for (int v : c)
            if (ab.is_subset_of(g.neighbors(v))) return true;
        return false;
    };
    if (item5(s.c1(), s.a1 | s.b1) || item5(s.c2(), s.a2 | s.b2)) k.degenerate_items.push_back(5);

    auto cut_other = [&](const VertexSet& x, const VertexSet& a, const VertexSet& b) {
        return components_of(g, x - a).size() >= 2 || components_of(g, x - b).size() >= 2;
    };
    k.cutting1 = (p1 && cut_other(s.x2, s.a2, s.b2)) || (p2 && cut_other(s.x1, s.a1, s.b1));
    return k;
}

struct ClassifiedSplit {
    TwoJoinSplit split;
    TwoJoinClass cls;
    bool from_flat_path = false;
};

inline bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected_set(g, g.vertices());
}

// Path 2-joins read off maximal flat paths of length >= 3. A graph that is
// a single cycle yields every cut into two arcs of at least four vertices.
inline std::vector<ClassifiedSplit> find_path_2joins(const Graph& g) {
    std::vector<ClassifiedSplit> out;
    const int n = g.vertex_count();
    if (is_cycle_graph(g)) {
        std::vector<int> order{0};
        for (int prev = -1, cur = 0; static_cast<int>(order.size()) < n;) {
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    nxt = w;
                    break;
                }
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        for (int k = 4; k <= n - 4; ++k)
            for (int i = 0; i < n; ++i) {
                VertexSet x1(n);
                for (int j = 0; j < k; ++j) x1.insert(order[(i + j) % n]);
                if (!x1.contains(0)) continue;
                if (auto s = split_from_partition(g, x1)) out.push_back({*s, classify_2join(g, *s), false});
            }
        return out;
    }
    for (const InducedPath& p : maximal_flat_paths(g)) {
        if (p.length() < 3) continue;
        VertexSet x1 = VertexSet::from(n, p.vertices);
        if (auto s = split_from_partition(g, x1)) out.push_back({*s, classify_2join(g, *s), true});
    }
    return out;
}

// ---- seeded search --------------------------------------------------------

namespace detail {

// For fixed a1,b1 in X1 and a2,b2 in X2 the side a vertex lands on decides
// its role, and every pair of vertices on opposite sides must agree with
// those roles. Putting v on one side therefore forces a set of vertices onto
// the same side; valid splits are exactly the assignments closed under it.
class SeededSplits {
  public:
    SeededSplits(const Graph& g, int a1, int b1, int a2, int b2) : g_(g), n_(g.vertex_count()) {
        const VertexSet &na1 = g.neighbors(a1), &nb1 = g.neighbors(b1), &na2 = g.neighbors(a2),
                        &nb2 = g.neighbors(b2);
        role_a1_ = na2 - nb2;
        role_b1_ = nb2 - na2;
        role_a2_ = na1 - nb1;
        role_b2_ = nb1 - na1;
        no_x1_ = na2 & nb2;
        no_x2_ = na1 & nb1;
        force1_.resize(n_);
        force2_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            const VertexSet& nv = g.neighbors(v);
            VertexSet f1 = role_a1_.contains(v) ? (nv ^ role_a2_) : role_b1_.contains(v) ? (nv ^ role_b2_) : nv;
            VertexSet f2 = role_a2_.contains(v) ? (nv ^ role_a1_) : role_b2_.contains(v) ? (nv ^ role_b1_) : nv;
            f1.erase(v);
            f2.erase(v);
            force1_[v] = f1;
            force2_[v] = f2;
        }
        seeds1_ = VertexSet(n_, {a1, b1});
        seeds2_ = VertexSet(n_, {a2, b2});
    }

    struct State {
        VertexSet in1, in2;
    };

    // closes the state; false on contradiction
    bool propagate(State& st, VertexSet add1, VertexSet add2) const {
        while (!add1.empty() || !add2.empty()) {
            if (add1.intersects(st.in2) || add2.intersects(st.in1)) return false;
            if (add1.intersects(no_x1_) || add2.intersects(no_x2_)) return false;
            add1 -= st.in1;
            add2 -= st.in2;
            st.in1 |= add1;
            st.in2 |= add2;
            VertexSet nxt1(n_), nxt2(n_);
            for (int v : add1) nxt1 |= force1_[v];
            for (int v : add2) nxt2 |= force2_[v];
            add1 = nxt1 - st.in1;
            add2 = nxt2 - st.in2;
        }
        return true;
    }

    std::optional<State> initial() const {
        State st{VertexSet(n_), VertexSet(n_)};
        if (!propagate(st, seeds1_ | no_x2_, seeds2_ | no_x1_)) return std::nullopt;
        return st;
    }

    TwoJoinSplit split_for(const VertexSet& x2) const {
        VertexSet x1 = g_.vertices() - x2;
        return {x1, x2, x1 & role_a1_, x1 & role_b1_, x2 & role_a2_, x2 & role_b2_};
    }

  private:
    const Graph& g_;
    int n_;
    VertexSet role_a1_, role_b1_, role_a2_, role_b2_, no_x1_, no_x2_, seeds1_, seeds2_;
    std::vector<VertexSet> force1_, force2_;
};

}  // namespace detail

struct TwoJoinSearch {
    std::optional<ClassifiedSplit> found;
    SearchResult result;
};

// Least seed first: edges a1a2 < b1b2 in edge order, b1 taken from the
// smaller end of the second edge before the larger. Within a seed the
// search branches on the smallest undecided vertex, X2 before X1, and tests
// the two extreme completions at every node.
template <class Accept>
TwoJoinSearch seeded_2join_search(const Graph& g, Accept&& accept, std::uint64_t budget = default_budget) {
    TwoJoinSearch out;
    const auto edges = g.edges();
    const int n = g.vertex_count();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a1, a2] = edges[i];
            for (int flip = 0; flip < 2; ++flip) {
                int b1 = flip ? edges[j].second : edges[j].first;
                int b2 = flip ? edges[j].first : edges[j].second;
                if (b1 == a1 || b1 == a2 || b2 == a1 || b2 == a2) continue;
                if (g.adjacent(a1, b2) || g.adjacent(a2, b1)) continue;
                detail::SeededSplits seeds(g, a1, b1, a2, b2);
                auto st = seeds.initial();
                if (!st) continue;
                bool stop = false;
                auto test = [&](const VertexSet& x2) {
                    TwoJoinSplit s = seeds.split_for(x2);
                    if (s.x1.size() < 2 || s.x2.size() < 2) return false;
                    TwoJoinClass k = classify_2join(g, s);
                    if (!accept(s, k)) return false;
                    out.found = ClassifiedSplit{s, k, false};
                    return true;
                };
                auto dfs = [&](auto&& self, detail::SeededSplits::State state) -> void {
                    if (stop) return;
                    if (++out.result.nodes > budget) {
                        out.result.status = SearchStatus::budget_exhausted;
                        stop = true;
                        return;
                    }
                    if (n - state.in1.size() < 3 || n - state.in2.size() < 3) return;
                    if (test(state.in2) || test(g.vertices() - state.in1)) {
                        stop = true;
                        return;
                    }
                    VertexSet open = g.vertices() - state.in1 - state.in2;
                    int w = open.first();
                    if (w < 0) return;
                    for (int side = 2; side >= 1 && !stop; --side) {
                        auto next = state;
                        VertexSet one(n, {w}), none(n);
                        if (seeds.propagate(next, side == 1 ? one : none, side == 2 ? one : none)) self(self, next);
                    }
                };
                dfs(dfs, *st);
                if (stop) return out;
            }
        }
    return out;
}

inline TwoJoinSearch find_nonpath_proper_2join(const Graph& g, std::uint64_t budget = default_budget) {
    return seeded_2join_search(
        g, [](const TwoJoinSplit&, const TwoJoinClass& k) { return k.proper && !k.is_path(); }, budget);
}

inline TwoJoinSearch find_nonpath_substantial_2join(const Graph& g, std::uint64_t budget = default_budget) {
    return seeded_2join_search(
        g, [](const TwoJoinSplit&, const TwoJoinClass& k) { return k.substantial && !k.is_path(); }, budget);
}

// Every 2-join, one entry per bipartition (X1 holds vertex 0).
inline std::vector<ClassifiedSplit> bruteforce_2join_oracle(const Graph& g, int size_guard = default_2join_guard) {
    detail::check_guard(g, size_guard, "bruteforce_2join_oracle");
    const int n = g.vertex_count();
    std::vector<ClassifiedSplit> out;
    if (n < 4) return out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
        VertexSet x1 = detail::from_mask(n, (m << 1) | 1);
        if (auto s = split_from_partition(g, x1)) out.push_back({*s, classify_2join(g, *s), false});
    }
    return out;
}

// ---- cutting of type 2 ----------------------------------------------------

struct CuttingType2Report {
    std::array<bool, 6> items{};  // items 1..6 at index 0..5
    bool decided = true;          // false when a path search ran out of budget
    int first_failure() const {
        for (int i = 0; i < 6; ++i)
            if (!items[i]) return i + 1;
        return 0;
    }
    bool almost() const { return decided && items[0] && items[1] && items[2] && items[3] && items[4]; }
    bool holds() const { return almost() && items[5]; }
};

inline CuttingType2Report verify_cutting_type2(const Graph& g, const TwoJoinSplit& s, const VertexSet& a3,
                                               const VertexSet& b3, std::uint64_t budget = default_budget) {
    if (!verify_2join(g, s)) throw PreconditionError("not a 2-join");
    CuttingType2Report r;
    r.items[0] = detail::is_path_side(g, s.x1, s.a1, s.b1);
    r.items[1] = !a3.empty() && !b3.empty() && a3.is_subset_of(s.a2) && b3.is_subset_of(s.b2);
    r.items[2] = is_complete_to(g, a3, b3);
    if (!r.items[0]) return r;
    const int a1 = s.a1.first(), b1 = s.b1.first();
    const Graph co = g.complement();
    bool even_paths = true, even_anti = true;
    VertexSet s1 = b3, s2 = a3;
    s1.insert(a1);
    s2.insert(b1);
    for (const VertexSet* side : {&s1, &s2}) {
        PathSearch p = find_induced_path(g, PathQuery{*side, g.vertices() - *side, Parity::odd, 2, budget});
        if (p.found()) even_paths = false;
        if (p.result.exhausted()) r.decided = false;
        PathSearch q = find_induced_path(co, PathQuery{g.vertices() - *side, *side, Parity::odd, 2, budget});
        if (q.found()) even_anti = false;
        if (q.result.exhausted()) r.decided = false;
    }
    r.items[3] = even_paths;
    r.items[4] = even_anti;
    r.items[5] = components(g, s.x1 | a3 | b3).size() >= 2;
    return r;
}

enum class Verdict3 { yes, no, unknown };

// Type-2 cuttingness by exhausting every (A3, B3) for each path-side
// orientation. unknown when a search ran out or the pair count passes the guard.
inline Verdict3 cutting_type2_exhaustive(const Graph& g, const TwoJoinSplit& s, int pair_guard = 1 << 12,
                                         std::uint64_t budget = default_budget) {
    bool unknown = false;
    for (const TwoJoinSplit& t : {s, s.swapped()}) {
        if (!detail::is_path_side(g, t.x1, t.a1, t.b1)) continue;
        auto av = t.a2.to_vector(), bv = t.b2.to_vector();
        if (av.size() >= 20 || bv.size() >= 20 ||
            ((std::uint64_t{1} << av.size()) - 1) * ((std::uint64_t{1} << bv.size()) - 1) >
                static_cast<std::uint64_t>(pair_guard)) {
            unknown = true;
            continue;
        }
        for (std::uint64_t ma = 1; ma < (std::uint64_t{1} << av.size()); ++ma) {
            VertexSet a3(g.vertex_count());
            for (std::size_t i = 0; i < av.size(); ++i)
                if (ma >> i & 1) a3.insert(av[i]);
            for (std::uint64_t mb = 1; mb < (std::uint64_t{1} << bv.size()); ++mb) {
                VertexSet b3(g.vertex_count());
                for (std::size_t i = 0; i < bv.size(); ++i)
                    if (mb >> i & 1) b3.insert(bv[i]);
                if (!is_complete_to(g, a3, b3)) continue;
                if (components(g, t.x1 | a3 | b3).size() < 2) continue;
                auto r = verify_cutting_type2(g, t, a3, b3, budget);
                if (r.holds()) return Verdict3::yes;
                if (!r.decided) unknown = true;
            }
        }
    }
    return unknown ? Verdict3::unknown : Verdict3::no;
}

// ---- blocks ---------------------------------------------------------------

struct Block {
    Graph graph;
    std::vector<int> to_parent;  // -1 for the vertices of the replacement path
};

struct Blocks {
    Block g1, g2;
};

namespace detail {

// G[keep] plus a path of `len` edges from a vertex complete to `a` to a
// vertex complete to `b`
inline Block replace_side(const Graph& g, const VertexSet& keep, const VertexSet& a, const VertexSet& b, int len) {
    Block out;
    out.to_parent = keep.to_vector();
    const int k = static_cast<int>(out.to_parent.size());
    GraphBuilder gb(k + len + 1);
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < k; ++i) index[out.to_parent[i]] = i;
    for (int i = 0; i < k; ++i)
        for (int w : g.neighbors(out.to_parent[i]) & keep)
            if (index[w] > i) gb.add_edge(i, index[w]);
    for (int i = 0; i < len; ++i) gb.add_edge(k + i, k + i + 1);
    for (int v : a) gb.add_edge(k, index[v]);
    for (int v : b) gb.add_edge(k + len, index[v]);
    for (int i = 0; i <= len; ++i) out.to_parent.push_back(-1);
    out.graph = std::move(gb).build();
    return out;
}

}  // namespace detail

// Path length: 1 or 2 when the replaced side is the path-side of a path
// 2-join, 3 or 4 otherwise; the parity of the 2-join picks one of the two.
inline Blocks build_blocks(const Graph& g, const TwoJoinSplit& s) {
    TwoJoinClass k = classify_2join(g, s);
    if (!verify_2join(g, s) || !k.proper) throw PreconditionError("build_blocks needs a proper 2-join");
    const bool odd = k.parity == JoinParity::odd;
    auto length = [&](bool path_side) { return (path_side ? 1 : 3) + (odd ? 0 : 1); };
    const bool p1 = k.path_side == PathSide::x1 || k.path_side == PathSide::both;
    const bool p2 = k.path_side == PathSide::x2 || k.path_side == PathSide::both;
    return {detail::replace_side(g, s.x1, s.a1, s.b1, length(p2)),
            detail::replace_side(g, s.x2, s.a2, s.b2, length(p1))};
}

// Deletes the interior of the path-side and links its ends by a path of
// length 1 (odd) or 2 (even). Kept vertices stay in ascending order.
inline Block contract_path_side(const Graph& g, const TwoJoinSplit& s) {
    TwoJoinSplit t = s;
    if (!detail::is_path_side(g, t.x1, t.a1, t.b1)) t = s.swapped();
    if (!verify_2join(g, t) || !detail::is_path_side(g, t.x1, t.a1, t.b1))
        throw PreconditionError("contract_path_side needs a path 2-join");
    const int a = t.a1.first(), b = t.b1.first();
    const int len = t.x1.size() - 1;
    VertexSet keep = t.x2;
    keep.insert(a);
    keep.insert(b);
    InducedSubgraph sub = induced_subgraph(g, keep);
    const int k = sub.graph.vertex_count();
    int ia = -1, ib = -1;
    for (int i = 0; i < k; ++i) {
        if (sub.to_parent[i] == a) ia = i;
        if (sub.to_parent[i] == b) ib = i;
    }
    const bool even = len % 2 == 0;
    GraphBuilder gb(k + (even ? 1 : 0));
    for (auto [u, v] : sub.graph.edges()) gb.add_edge(u, v);
    Block out{Graph(), sub.to_parent};
    if (even) {
        gb.add_edge(ia, k);
        gb.add_edge(k, ib);
        out.to_parent.push_back(-1);
    } else {
        gb.add_edge(ia, ib);
    }
    out.graph = std::move(gb).build();
    return out;
}

}  // namespace bsp

#endif
