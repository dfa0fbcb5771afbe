#ifndef BSP_GRAPH_HPP
#define BSP_GRAPH_HPP

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace bsp {

using Edge = std::pair<int, int>;

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

    // Duplicate edges collapse. Self-loops and out-of-range endpoints throw.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edges_; }
    bool adjacent(int u, int v) const noexcept { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const noexcept { return adj_[v]; }
    VertexSet closed_neighbors(int v) const {
        VertexSet s = adj_[v];
        s.insert(v);
        return s;
    }
    int degree(int v) const noexcept { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edges_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        const int n = vertex_count();
        Graph h(n);
        for (int v = 0; v < n; ++v) {
            h.adj_[v] = adj_[v].complement();
            h.adj_[v].erase(v);
        }
        h.edges_ = n * (n - 1) / 2 - edges_;
        h.labels_ = labels_;
        return h;
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(int v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }
    Graph with_labels(std::vector<std::string> labels) const {
        if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
            throw InputError("label count does not match vertex count");
        Graph g(*this);
        g.labels_ = std::move(labels);
        return g;
    }

    // adjacency only, labels are ignored
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    int edges_ = 0;
    std::vector<std::string> labels_;
};

class GraphBuilder {
  public:
    explicit GraphBuilder(int n) : g_(n) {}
    int vertex_count() const noexcept { return g_.vertex_count(); }
    // returns false when the edge was already present
    bool add_edge(int u, int v) {
        const int n = g_.vertex_count();
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (g_.adj_[u].contains(v)) return false;
        g_.adj_[u].insert(v);
        g_.adj_[v].insert(u);
        ++g_.edges_;
        return true;
    }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    void set_labels(std::vector<std::string> labels) { g_ = g_.with_labels(std::move(labels)); }
    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

  private:
    Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count");
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // child vertex -> parent vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.to_parent = keep.to_vector();
    const int k = static_cast<int>(out.to_parent.size());
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < k; ++i) index[out.to_parent[i]] = i;
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        const VertexSet nb = g.neighbors(out.to_parent[i]) & keep;
        for (int w : nb)
            if (index[w] > i) b.add_edge(i, index[w]);
    }
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (int v : out.to_parent) labels.push_back(g.labels()[v]);
        b.set_labels(std::move(labels));
    }
    out.graph = std::move(b).build();
    return out;
}

// Components of G[within], ordered by smallest member.
inline std::vector<VertexSet> components_of(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp(g.vertex_count());
        VertexSet frontier(g.vertex_count());
        frontier.insert(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            left -= frontier;
            VertexSet nxt(g.vertex_count());
            for (int v : frontier) nxt |= g.neighbors(v);
            nxt &= left;
            frontier = nxt;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// Components of G minus `removed`.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    return components_of(g, g.vertices() - removed);
}
inline std::vector<VertexSet> components(const Graph& g) { return components_of(g, g.vertices()); }

// Components of the complement of G[s], without building the complement.
inline std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp(g.vertex_count());
        std::vector<int> stack{left.first()};
        left.erase(stack.back());
        comp.insert(stack.back());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet nxt = left - g.neighbors(v);
            for (int w : nxt) {
                stack.push_back(w);
                comp.insert(w);
            }
            left -= nxt;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected_set(const Graph& g, const VertexSet& s) { return components_of(g, s).size() <= 1; }
inline bool is_anticonnected_set(const Graph& g, const VertexSet& s) { return anticomponents(g, s).size() <= 1; }

// every vertex of a sees every vertex of b
inline bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (!(b - g.neighbors(v) - VertexSet(g.vertex_count(), {v})).empty()) return false;
    return true;
}
inline bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (g.neighbors(v).intersects(b)) return false;
    return true;
}

// union of neighbourhoods of s, minus s
inline VertexSet neighborhood_of(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    for (int v : s) out |= g.neighbors(v);
    return out - s;
}

}  // namespace bsp

#endif
