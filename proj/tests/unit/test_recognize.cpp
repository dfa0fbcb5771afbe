#include <gtest/gtest.h>

#include "bsp/families.hpp"
#include "bsp/homogeneous.hpp"
#include "bsp/recognize.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"
#include "support/small_graphs.hpp"

using namespace bsp;
namespace fam = bsp::families;

namespace {

Graph without_edge(const Graph& g, int u, int v) {
    GraphBuilder b(g.vertex_count());
    for (auto [x, y] : g.edges())
        if (!((x == u && y == v) || (x == v && y == u))) b.add_edge(x, y);
    return std::move(b).build();
}

Graph with_edge(const Graph& g, int u, int v) {
    GraphBuilder b(g.vertex_count());
    for (auto [x, y] : g.edges()) b.add_edge(x, y);
    b.add_edge(u, v);
    return std::move(b).build();
}

PathDoubleSplitParts ds_parts(int m, int n, int extra) {
    PathDoubleSplitParts p;
    for (int i = 0; i < m; ++i) p.a.push_back(i);
    for (int i = 0; i < m; ++i) p.b.push_back(m + i);
    for (int j = 0; j < n; ++j) p.c.push_back(2 * m + j);
    for (int j = 0; j < n; ++j) p.d.push_back(2 * m + n + j);
    const int base = 2 * m + 2 * n;
    p.e = VertexSet(base + extra);
    for (int k = 0; k < extra; ++k) p.e.insert(base + k);
    return p;
}

}  // namespace

TEST(BipartiteTest, Examples) {
    BipartiteResult c6 = is_bipartite(fam::cycle(6));
    ASSERT_TRUE(c6.bipartite);
    EXPECT_EQ(c6.sides[0].size(), 3);
    EXPECT_EQ(c6.sides[1].size(), 3);
    BipartiteResult c5 = is_bipartite(fam::cycle(5));
    EXPECT_FALSE(c5.bipartite);
    EXPECT_EQ(c5.odd_cycle.size(), 5U);
    EXPECT_TRUE(is_bipartite(Graph(0)).bipartite);
    EXPECT_TRUE(is_bipartite(Graph(4)).bipartite);
}

TEST(ClawDiamondTest, Examples) {
    Graph claw = fam::complete_bipartite(1, 3);
    auto c = find_claw(claw);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[0], 0);
    Graph diamond = without_edge(fam::complete(4), 0, 1);
    EXPECT_TRUE(find_diamond(diamond).has_value());
    EXPECT_FALSE(find_claw(fam::cycle(6)).has_value());
    EXPECT_FALSE(find_diamond(fam::cycle(6)).has_value());
}

TEST(OddHoleTest, Examples) {
    HoleSearch c5 = find_odd_hole_bruteforce(fam::cycle(5));
    ASSERT_TRUE(c5.found());
    EXPECT_EQ(c5.hole->size(), 5U);
    // chord 0-3 of C7 leaves the hole 0 3 4 5 6
    HoleSearch chord = find_odd_hole_bruteforce(with_edge(fam::cycle(7), 0, 3));
    ASSERT_TRUE(chord.found());
    std::vector<int> h = *chord.hole;
    std::sort(h.begin(), h.end());
    EXPECT_EQ(h, (std::vector<int>{0, 3, 4, 5, 6}));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        EXPECT_TRUE(find_odd_hole_bruteforce(test::random_bipartite(5, 5, 1, 2, seed)).proven_absent());
}

TEST(BergeTest, Examples) {
    EXPECT_TRUE(is_berge_bruteforce(fam::cycle(8)).berge);
    BergeVerdict c7 = is_berge_bruteforce(fam::cycle(7));
    EXPECT_FALSE(c7.berge);
    EXPECT_FALSE(c7.in_complement);
    EXPECT_EQ(c7.witness.size(), 7U);
    BergeVerdict co7 = is_berge_bruteforce(fam::cycle(7).complement());
    EXPECT_FALSE(co7.berge);
    EXPECT_TRUE(co7.in_complement);
    EXPECT_EQ(co7.witness.size(), 7U);
}

TEST(LineOfBipartiteTest, Examples) {
    EXPECT_TRUE(is_line_of_bipartite(fam::prism()).line_of_bipartite);
    LgbVerdict claw = is_line_of_bipartite(fam::complete_bipartite(1, 3));
    EXPECT_FALSE(claw.line_of_bipartite);
    EXPECT_EQ(claw.obstruction, LgbObstruction::claw);
    LgbVerdict c5 = is_line_of_bipartite(fam::cycle(5));
    EXPECT_FALSE(c5.line_of_bipartite);
    EXPECT_EQ(c5.obstruction, LgbObstruction::odd_hole);
}

TEST(LineOfBipartiteTest, MatchesRootGraphOracle) {
    test::SmallGraphLevels lv = test::generate_connected(7, false);
    int checked = 0, positive = 0;
    for (int n = 1; n <= 7; ++n)
        for (std::uint64_t code : lv.levels[n]) {
            Graph g = test::from_code(code).to_graph();
            const bool oracle = test::is_lgb_oracle(g);
            EXPECT_EQ(is_line_of_bipartite(g).line_of_bipartite, oracle) << "graph code " << code;
            ++checked;
            positive += oracle ? 1 : 0;
        }
    EXPECT_EQ(checked, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    EXPECT_GT(positive, 0);
}

TEST(LineOfBipartiteTest, OracleOnLineGraphs) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph root = test::random_bipartite(3, 4, 1, 2, seed);
        if (root.edge_count() == 0 || root.edge_count() > 8) continue;
        Graph lg = fam::line_graph(root);
        EXPECT_TRUE(test::is_lgb_oracle(lg));
        EXPECT_TRUE(is_line_of_bipartite(lg).line_of_bipartite);
    }
}

TEST(DoubleSplitTest, Examples) {
    auto ds = is_double_split(fam::double_split(2, 2));
    ASSERT_TRUE(ds.has_value());
    EXPECT_EQ(ds->m, 2);
    EXPECT_EQ(ds->n, 2);
    Graph g = fam::double_split(2, 2);
    for (int v : ds->a) EXPECT_EQ(g.degree(v), 3);
    for (int v : ds->c) EXPECT_EQ(g.degree(v), 4);
    EXPECT_FALSE(is_double_split(fam::cycle(8)).has_value());
    // a1 c1 removed: the P4 on a1 b1 c1 d1 is gone
    EXPECT_FALSE(is_double_split(without_edge(g, 0, 4)).has_value());
}

TEST(DoubleSplitTest, DegreeFormulas) {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            for (bool co : {false, true}) {
                Graph g = fam::double_split(m, n);
                if (co) g = g.complement();
                auto ds = is_double_split(g);
                ASSERT_TRUE(ds.has_value()) << m << "," << n << " co=" << co;
                for (int v : ds->a) EXPECT_EQ(g.degree(v), 1 + ds->n);
                for (int v : ds->b) EXPECT_EQ(g.degree(v), 1 + ds->n);
                for (int v : ds->c) EXPECT_EQ(g.degree(v), 2 * ds->n - 2 + ds->m);
                for (int v : ds->d) EXPECT_EQ(g.degree(v), 2 * ds->n - 2 + ds->m);
                // the complement of DS(m, n) is DS(n, m)
                EXPECT_EQ(ds->m, co ? n : m);
                EXPECT_EQ(ds->n, co ? m : n);
            }
        }
}

TEST(BasicTest, Examples) {
    EXPECT_EQ(is_basic(fam::cycle(12)).cls, BasicClass::bipartite);
    EXPECT_EQ(is_basic(fam::cycle(6).complement()).cls, BasicClass::cobipartite);
    BasicVerdict ds = is_basic(fam::double_split(2, 2));
    EXPECT_EQ(ds.cls, BasicClass::double_split);
    ASSERT_TRUE(ds.double_split.has_value());
    EXPECT_EQ(is_basic(fam::complete(4)).cls, BasicClass::cobipartite);
    // the prism is the complement of C6, cobipartite comes first
    EXPECT_EQ(is_basic(fam::prism()).cls, BasicClass::cobipartite);
    EXPECT_EQ(is_basic(fam::line_graph(fam::complete_bipartite(3, 3))).cls, BasicClass::line_of_bipartite);
    EXPECT_EQ(is_basic(fam::cycle(7)).cls, BasicClass::none);
}

TEST(BasicTest, ComplementSwapsClasses) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        Graph g = test::random_graph(n, 1 + static_cast<int>(seed % 3), 4, seed);
        auto m = basic_memberships(g);
        auto c = basic_memberships(g.complement());
        EXPECT_EQ(m[0], c[1]);
        EXPECT_EQ(m[1], c[0]);
        EXPECT_EQ(m[2], c[3]);
        EXPECT_EQ(m[3], c[2]);
        EXPECT_EQ(m[4], c[4]);
        BasicVerdict v = is_basic(g), w = is_basic(g.complement());
        EXPECT_EQ(v.is_basic(), w.is_basic());
        if (v.is_basic()) {
            EXPECT_TRUE(basic_memberships(g.complement())[static_cast<int>(co_class(v.cls))]);
        }
    }
}

TEST(BasicTest, WitnessesVerify) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = test::random_graph(8, 1, 2, seed);
        BasicVerdict v = is_basic(g);
        if (v.cls == BasicClass::bipartite || v.cls == BasicClass::cobipartite) {
            const Graph h = v.cls == BasicClass::bipartite ? g : g.complement();
            EXPECT_EQ(v.coloring[0] | v.coloring[1], g.vertices());
            for (const VertexSet& side : v.coloring)
                for (int x : side) EXPECT_FALSE(h.neighbors(x).intersects(side));
        }
    }
}

TEST(PathDoubleSplitTest, Examples) {
    EXPECT_TRUE(verify_path_double_split(fam::double_split(2, 2), ds_parts(2, 2, 0)));
    EXPECT_TRUE(verify_path_double_split(fam::pds22_len5(), ds_parts(2, 2, 4)));
    CheckReport even = verify_path_double_split(fam::path_double_split(2, 2, {4, 1}), ds_parts(2, 2, 3));
    EXPECT_FALSE(even);
    EXPECT_FALSE(even.violation.empty());
}

TEST(PathDoubleSplitTest, AgreesWithDoubleSplitWhenEEmpty) {
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 3; ++n) {
            Graph g = fam::double_split(m, n);
            PathDoubleSplitParts p = ds_parts(m, n, 0);
            EXPECT_EQ(static_cast<bool>(verify_path_double_split(g, p)), is_double_split(g).has_value());
            // every single-edge flip breaks both
            for (auto [u, v] : g.edges()) {
                Graph h = without_edge(g, u, v);
                EXPECT_EQ(static_cast<bool>(verify_path_double_split(h, p)), is_double_split(h).has_value())
                    << "removed " << u << "-" << v;
            }
        }
}

TEST(PathCobipartiteTest, Examples) {
    Graph two_k2 = fam::cycle(4).complement();
    EXPECT_TRUE(verify_path_cobipartite(two_k2, VertexSet(4, {0, 2}), VertexSet(4, {1, 3}), VertexSet(4)));
    // triangles 0 1 2 and 3 4 5, a path 0 6 7 3 of length 3
    Graph odd = Graph::from_edges(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 7}, {7, 3}});
    EXPECT_TRUE(verify_path_cobipartite(odd, VertexSet(8, {0, 1, 2}), VertexSet(8, {3, 4, 5}), VertexSet(8, {6, 7})));
    Graph even = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 3}});
    EXPECT_FALSE(verify_path_cobipartite(even, VertexSet(7, {0, 1, 2}), VertexSet(7, {3, 4, 5}), VertexSet(7, {6})));
}

TEST(HomogeneousTest, Contrex3Reconstruction) {
    auto cx = test::reconstruct_contrex3();
    ASSERT_TRUE(cx.has_value());
    // frozen from the search: F edges f1f4 f2f3, c sees f3 f4, d sees f1 f2
    EXPECT_EQ(cx->bits, 25056U);
    EXPECT_EQ(cx->graph.edge_count(), 31);
    HomogeneousSixTuple t = test::contrex3_tuple();
    EXPECT_TRUE(verify_homogeneous_pair(cx->graph, t));
    HomogeneousReport r = verify_homogeneous_2join(cx->graph, t);
    EXPECT_EQ(r.verdict, HomogeneousVerdict::verified) << r.reason;
    DegenerateItems d = verify_degenerate_homogeneous_2join(cx->graph, t);
    EXPECT_FALSE(d.item1);
    EXPECT_FALSE(d.item2);
}

TEST(HomogeneousTest, EmptySetIsPrecondition) {
    Graph g = test::contrex3_candidate(25056U);
    HomogeneousSixTuple t = test::contrex3_tuple();
    t.e = t.e | t.f;
    t.f = VertexSet(12);
    EXPECT_THROW(verify_homogeneous_pair(g, t), PreconditionError);
}

TEST(HomogeneousTest, VertexCompleteToBFails) {
    Graph g = with_edge(test::contrex3_candidate(25056U), 0, 3);  // a1 now sees b1 and b2
    CheckReport r = verify_homogeneous_pair(g, test::contrex3_tuple());
    EXPECT_FALSE(r);
    EXPECT_NE(r.violation.find("A"), std::string::npos);
    EXPECT_EQ(verify_homogeneous_2join(g, test::contrex3_tuple()).verdict, HomogeneousVerdict::refuted);
}

TEST(HomogeneousTest, DegenerateItems) {
    HomogeneousSixTuple t = test::contrex3_tuple();
    // c loses f3 and f4: N(c) = {a1, a2, e1}
    Graph g = without_edge(without_edge(test::contrex3_candidate(25056U), 4, 10), 4, 11);
    DegenerateItems two = verify_degenerate_homogeneous_2join(g, t);
    EXPECT_TRUE(two.item2);
    EXPECT_FALSE(two.item1);
    // c loses e1 as well: nothing in E or D
    DegenerateItems one = verify_degenerate_homogeneous_2join(without_edge(g, 4, 6), t);
    EXPECT_TRUE(one.item1);
}

TEST(HomogeneousTest, EvenChainRefuted) {
    // d moved next to e1: the C-D path c e1 d has length 2
    Graph g = test::contrex3_candidate(25056U);
    GraphBuilder b(12);
    for (auto [u, v] : g.edges())
        if (!(u == 5 && v == 7)) b.add_edge(u, v);
    b.add_edge(5, 6);
    b.add_edge(7, 8);
    b.add_edge(7, 9);
    Graph h = std::move(b).build();
    EXPECT_EQ(verify_homogeneous_2join(h, test::contrex3_tuple()).verdict, HomogeneousVerdict::refuted);
}
