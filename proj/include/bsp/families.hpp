#ifndef BSP_FAMILIES_HPP
#define BSP_FAMILIES_HPP

#include <string>
#include <vector>

#include "graph.hpp"

// Named graphs used by the tests, the CLI fixtures and the examples.
namespace bsp::families {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

// sides 0..p-1 and p..p+q-1
inline Graph complete_bipartite(int p, int q) {
    GraphBuilder b(p + q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) b.add_edge(i, p + j);
    return std::move(b).build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    GraphBuilder b(n + h.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(n + u, n + v);
    return std::move(b).build();
}

// vertices of L(g) are the edges of g in g.edges() order
inline Graph line_graph(const Graph& g) {
    const auto e = g.edges();
    const int k = static_cast<int>(e.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                b.add_edge(i, j);
    return std::move(b).build();
}

// two triangles 0,1,2 and 3,4,5 with the matching i, i+3
inline Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Path-double split graph. Vertex order a_1..a_m, b_1..b_m, c_1..c_n,
// d_1..d_n, then the interior of each subdivided matching edge in order.
// a_i sees c_j and b_i sees d_j; lengths[i] is the length of the a_i-b_i path.
inline Graph path_double_split(int m, int n, const std::vector<int>& lengths) {
    if (m < 2 || n < 2) throw InputError("double split needs m, n >= 2");
    if (static_cast<int>(lengths.size()) != m) throw InputError("one length per matching edge");
    int extra = 0;
    for (int len : lengths) {
        if (len < 1) throw InputError("matching path length must be positive");
        extra += len - 1;
    }
    const int base = 2 * m + 2 * n;
    auto a = [](int i) { return i; };
    auto bv = [m](int i) { return m + i; };
    auto c = [m](int j) { return 2 * m + j; };
    auto d = [m, n](int j) { return 2 * m + n + j; };
    GraphBuilder b(base + extra);
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) labels.push_back("c" + std::to_string(j + 1));
    for (int j = 0; j < n; ++j) labels.push_back("d" + std::to_string(j + 1));
    int next = base;
    for (int i = 0; i < m; ++i) {
        int prev = a(i);
        for (int k = 1; k < lengths[i]; ++k) {
            labels.push_back("e" + std::to_string(i + 1) + "_" + std::to_string(k));
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, bv(i));
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            b.add_edge(c(j), c(k));
            b.add_edge(c(j), d(k));
            b.add_edge(d(j), c(k));
            b.add_edge(d(j), d(k));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            b.add_edge(a(i), c(j));
            b.add_edge(bv(i), d(j));
        }
    b.set_labels(std::move(labels));
    return std::move(b).build();
}

inline Graph double_split(int m, int n) { return path_double_split(m, n, std::vector<int>(m, 1)); }

// DS(2,2) with the matching edge a_1 b_1 subdivided into a path of length 5
inline Graph pds22_len5() { return path_double_split(2, 2, {5, 1}); }

// Two 6-cycles a1 c1 c2 b1 c3 c4 (0..5) and a2 d1 d2 b2 d3 d4 (6..11)
// joined by a1a2 and b1b2.
inline Graph double_theta() {
    GraphBuilder b(12);
    for (int s : {0, 6})
        for (int i = 0; i < 6; ++i) b.add_edge(s + i, s + (i + 1) % 6);
    b.add_edge(0, 6);
    b.add_edge(3, 9);
    b.set_labels({"a1", "c1", "c2", "b1", "c3", "c4", "a2", "d1", "d2", "b2", "d3", "d4"});
    return std::move(b).build();
}

// Two 4-cycles a1 c b1 c' (0..3) and a2 d b2 d' (4..7) joined by a1a2, b1b2.
inline Graph square_pair() {
    GraphBuilder b(8);
    for (int s : {0, 4})
        for (int i = 0; i < 4; ++i) b.add_edge(s + i, s + (i + 1) % 4);
    b.add_edge(0, 4);
    b.add_edge(2, 6);
    b.set_labels({"a1", "c", "b1", "c'", "a2", "d", "b2", "d'"});
    return std::move(b).build();
}

// 4-cycle a-b-d-c-a (0,1,3,2) with e (4) on a,b and f (5) on c,d
inline Graph check_fixture() {
    return Graph::from_edges(6, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 0}, {4, 1}, {5, 2}, {5, 3}});
}

// same outside attachments, inside edges ad and bc only
inline Graph check_fixture_crossed() {
    return Graph::from_edges(6, {{0, 3}, {1, 2}, {4, 0}, {4, 1}, {5, 2}, {5, 3}});
}

}  // namespace bsp::families

#endif
