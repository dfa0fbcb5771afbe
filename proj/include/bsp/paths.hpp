#ifndef BSP_PATHS_HPP
#define BSP_PATHS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace bsp {

enum class Parity { odd, even, any };

enum class SearchStatus { complete, budget_exhausted };

inline constexpr std::uint64_t default_budget = 10'000'000;

struct InducedPath {
    std::vector<int> vertices;
    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    friend bool operator==(const InducedPath&, const InducedPath&) = default;
};

struct PathQuery {
    VertexSet ends_in;
    VertexSet interior_in;
    Parity parity = Parity::any;
    int min_length = 1;
    std::uint64_t budget = default_budget;
};

struct SearchResult {
    SearchStatus status = SearchStatus::complete;
    std::uint64_t nodes = 0;
    bool stopped = false;  // the visitor asked to stop
    bool exhausted() const noexcept { return status == SearchStatus::budget_exhausted; }
};

inline bool parity_matches(Parity p, int length) {
    return p == Parity::any || (p == Parity::odd) == (length % 2 == 1);
}

// Checker independent of the search: consecutive vertices adjacent,
// all other pairs non-adjacent, no repeats.
inline bool is_induced_path(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return false;
            if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
        }
    return true;
}

namespace detail {

// Depth-first search over induced paths leaving `start`. A vertex in
// `targets` closes a path; a vertex in `interior` extends it. Branches that
// can no longer reach a target are cut. Neighbours are tried in ascending
// order, so paths come out in lexicographic order of their sequences.
template <class Visitor>
class InducedPathDfs {
  public:
    InducedPathDfs(const Graph& g, const VertexSet& targets, const VertexSet& interior, Parity parity, int min_length,
                   std::uint64_t budget, Visitor& visit)
        : g_(g), targets_(targets), interior_(interior), parity_(parity), min_length_(min_length), budget_(budget),
          visit_(visit) {}

    // returns false when the search must stop (visitor or budget)
    bool run(int start, SearchResult& res) {
        path_.assign(1, start);
        VertexSet blocked(g_.vertex_count());
        blocked.insert(start);
        return extend(blocked, res);
    }

  private:
    bool reachable(int y, const VertexSet& avail) const {
        VertexSet goal = targets_ & avail;
        if (goal.empty()) return false;
        if (g_.neighbors(y).intersects(goal)) return true;
        VertexSet open = interior_ & avail;
        VertexSet frontier = g_.neighbors(y) & open;
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet nxt(g_.vertex_count());
            for (int v : frontier) nxt |= g_.neighbors(v);
            if (nxt.intersects(goal)) return true;
            nxt &= open;
            nxt -= seen;
            seen |= nxt;
            frontier = nxt;
        }
        return false;
    }

    // blocked = closed neighbourhoods of all path vertices but the last, plus the last
    bool extend(const VertexSet& blocked, SearchResult& res) {
        const int last = path_.back();
        const VertexSet cand = g_.neighbors(last) - blocked;
        if (cand.empty()) return true;
        VertexSet next_blocked = blocked | g_.neighbors(last);
        for (int y : cand) {
            if (++res.nodes > budget_) {
                res.status = SearchStatus::budget_exhausted;
                return false;
            }
            const int len = static_cast<int>(path_.size());
            path_.push_back(y);
            if (targets_.contains(y) && len >= min_length_ && parity_matches(parity_, len)) {
                if (!visit_(InducedPath{path_})) {
                    res.stopped = true;
                    return false;
                }
            }
            if (interior_.contains(y)) {
                VertexSet nb = next_blocked;
                nb.insert(y);
                if (reachable(y, nb.complement())) {
                    if (!extend(nb, res)) return false;
                }
            }
            path_.pop_back();
        }
        return true;
    }

    const Graph& g_;
    const VertexSet& targets_;
    const VertexSet& interior_;
    Parity parity_;
    int min_length_;
    std::uint64_t budget_;
    Visitor& visit_;
    std::vector<int> path_;
};

}  // namespace detail

// Calls visit(InducedPath) for every induced path with both ends in
// q.ends_in, interior in q.interior_in, length >= q.min_length and the
// requested parity. Each path is reported once, from its smaller end.
// visit returns false to stop early.
template <class Visitor>
SearchResult for_each_induced_path(const Graph& g, const PathQuery& q, Visitor&& visit) {
    SearchResult res;
    for (int s : q.ends_in) {
        VertexSet targets = q.ends_in;
        for (int t = targets.first(); t >= 0 && t <= s; t = targets.next(t)) targets.erase(t);
        if (targets.empty()) break;
        detail::InducedPathDfs dfs(g, targets, q.interior_in, q.parity, q.min_length, q.budget, visit);
        if (!dfs.run(s, res)) break;
    }
    return res;
}

struct PathList {
    std::vector<InducedPath> paths;
    SearchResult result;
};

inline PathList enumerate_induced_paths(const Graph& g, const PathQuery& q) {
    PathList out;
    out.result = for_each_induced_path(g, q, [&](InducedPath p) {
        out.paths.push_back(std::move(p));
        return true;
    });
    return out;
}

// Antipaths of g are the paths of its complement, with the same sequences.
inline PathList enumerate_induced_antipaths(const Graph& g, const PathQuery& q) {
    return enumerate_induced_paths(g.complement(), q);
}

struct PathSearch {
    std::optional<InducedPath> path;
    SearchResult result;
    bool found() const noexcept { return path.has_value(); }
    bool proven_absent() const noexcept { return !path && !result.exhausted(); }
};

// First induced path with q's constraints, or proof of absence.
inline PathSearch find_induced_path(const Graph& g, const PathQuery& q) {
    PathSearch out;
    out.result = for_each_induced_path(g, q, [&](InducedPath p) {
        out.path = std::move(p);
        return false;
    });
    return out;
}

// Directed search from u to v; the lexicographically first odd induced path.
inline PathSearch find_induced_path_between(const Graph& g, int u, int v, Parity parity, int min_length,
                                            const VertexSet& interior, std::uint64_t budget = default_budget) {
    if (u == v) throw PreconditionError("path ends must differ");
    PathSearch out;
    auto visit = [&](InducedPath p) {
        out.path = std::move(p);
        return false;
    };
    VertexSet targets(g.vertex_count(), {v});
    VertexSet inner = interior;
    inner.erase(u);
    inner.erase(v);
    detail::InducedPathDfs dfs(g, targets, inner, parity, min_length, budget, visit);
    dfs.run(u, out.result);
    return out;
}

inline PathSearch find_odd_induced_path(const Graph& g, int u, int v, std::uint64_t budget = default_budget) {
    return find_induced_path_between(g, u, v, Parity::odd, 1, g.vertices(), budget);
}

namespace detail {

inline bool is_flat(const Graph& g, const std::vector<int>& p) {
    if (p.size() < 2 || !is_induced_path(g, p)) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (g.degree(p[i]) != 2) return false;
    VertexSet on = VertexSet::from(g.vertex_count(), p);
    return ((g.neighbors(p.front()) & g.neighbors(p.back())) - on).empty();
}

inline InducedPath oriented(std::vector<int> p) {
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    return InducedPath{std::move(p)};
}

// Chains of degree-2 vertices, each extended by one vertex at both ends.
// Chains that close into a cycle component are skipped.
inline std::vector<std::vector<int>> degree2_chains(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet deg2(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) deg2.insert(v);
    std::vector<std::vector<int>> out;
    for (const VertexSet& comp : components_of(g, deg2)) {
        // a chain component is a path or a cycle of G[deg2]
        int end = -1;
        for (int v : comp)
            if ((g.neighbors(v) & comp).size() <= 1) {
                end = v;
                break;
            }
        if (end < 0) continue;  // cycle component
        std::vector<int> seq;
        int prev = -1;
        for (int cur = end; cur >= 0;) {
            seq.push_back(cur);
            int nxt = -1;
            for (int w : g.neighbors(cur) & comp)
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
        }
        // outside neighbours at both ends
        auto outside = [&](int v, int inner) {
            for (int w : g.neighbors(v))
                if (!comp.contains(w) && w != inner) return w;
            return -1;
        };
        int left = outside(seq.front(), seq.size() > 1 ? seq[1] : -1);
        int right = -1;
        if (seq.size() == 1) {
            for (int w : g.neighbors(seq.front()))
                if (w != left) right = w;
        } else {
            right = outside(seq.back(), seq[seq.size() - 2]);
        }
        std::vector<int> full;
        if (left >= 0) full.push_back(left);
        full.insert(full.end(), seq.begin(), seq.end());
        if (right >= 0) full.push_back(right);
        out.push_back(std::move(full));
    }
    return out;
}

}  // namespace detail

// Inclusion-maximal flat paths. Interior vertices have degree 2 and the ends
// have no common neighbour off the path. Cycle components contribute nothing.
inline std::vector<InducedPath> maximal_flat_paths(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<InducedPath> out;
    for (const auto& seq : detail::degree2_chains(g)) {
        std::vector<std::pair<int, int>> flat;  // windows [i, j]
        const int k = static_cast<int>(seq.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> w(seq.begin() + i, seq.begin() + j + 1);
                if (detail::is_flat(g, w)) flat.emplace_back(i, j);
            }
        for (auto [i, j] : flat) {
            bool maximal = true;
            for (auto [x, y] : flat)
                if (x <= i && j <= y && (x != i || y != j)) maximal = false;
            if (maximal) out.push_back(detail::oriented({seq.begin() + i, seq.begin() + j + 1}));
        }
    }
    // single edges between vertices of degree other than 2
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 2) continue;
        for (int v : g.neighbors(u))
            if (v > u && g.degree(v) != 2 && !g.neighbors(u).intersects(g.neighbors(v)))
                out.push_back(InducedPath{{u, v}});
    }
    std::sort(out.begin(), out.end(), [](const InducedPath& a, const InducedPath& b) { return a.vertices < b.vertices; });
    return out;
}

inline int long_flat_path_count(const Graph& g) {
    int f = 0;
    for (const auto& p : maximal_flat_paths(g))
        if (p.length() >= 3) ++f;
    return f;
}

// Every flat path with length in [min_len, max_len], cycles included, each
// reported once from its smaller end.
inline std::vector<InducedPath> all_flat_paths(const Graph& g, int min_len, int max_len) {
    std::vector<InducedPath> out;
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        // extend through degree-2 vertices only
        std::vector<int> p{s};
        auto rec = [&](auto&& self) -> void {
            int len = static_cast<int>(p.size()) - 1;
            if (len >= min_len && p.back() > s && detail::is_flat(g, p)) out.push_back(InducedPath{p});
            if (len >= max_len) return;
            if (len >= 1 && g.degree(p.back()) != 2) return;
            for (int y : g.neighbors(p.back())) {
                if (std::find(p.begin(), p.end(), y) != p.end()) continue;
                p.push_back(y);
                if (is_induced_path(g, p)) self(self);
                p.pop_back();
            }
        };
        rec(rec);
    }
    std::sort(out.begin(), out.end(), [](const InducedPath& a, const InducedPath& b) { return a.vertices < b.vertices; });
    return out;
}

}  // namespace bsp

#endif
