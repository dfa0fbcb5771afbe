#include <gtest/gtest.h>

#include "bsp/decompose.hpp"
#include "bsp/families.hpp"
#include "bsp/partition.hpp"
#include "bsp/twojoin.hpp"
#include "support/corpus.hpp"
#include "support/small_graphs.hpp"

using namespace bsp;
namespace fam = bsp::families;

namespace {

VertexSet vs(int n, std::initializer_list<int> xs) { return VertexSet(n, xs); }

TwoJoinSplit split(int n, std::initializer_list<int> x1, std::initializer_list<int> a1, std::initializer_list<int> b1,
                   std::initializer_list<int> a2, std::initializer_list<int> b2) {
    VertexSet s1 = vs(n, x1);
    return {s1, VertexSet::full(n) - s1, vs(n, a1), vs(n, b1), vs(n, a2), vs(n, b2)};
}

std::uint64_t canon(const Graph& g) {
    test::SmallGraph s;
    s.n = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= static_cast<std::uint16_t>(1U << v);
        s.adj[v] |= static_cast<std::uint16_t>(1U << u);
    }
    return test::canonical_code(s);
}

bool isomorphic(const Graph& g, const Graph& h) { return canon(g) == canon(h); }

// the C8 4+4 split of the examples
TwoJoinSplit c8_split() { return split(8, {0, 1, 2, 3}, {3}, {0}, {4}, {7}); }

// path a1 p q b1 (0..3); A2 = {4,5,6}, B2 = {7}; 4 sees 5, 6 and 7.
// With A3 = {4}, B3 = {7} the split is cutting of type 2.
Graph cut2_graph() {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {0, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}});
}
TwoJoinSplit cut2_split() { return split(8, {0, 1, 2, 3}, {0}, {3}, {4, 5, 6}, {7}); }

Graph theta(std::initializer_list<int> lengths) {
    int n = 2;
    for (int l : lengths) n += l - 1;
    GraphBuilder b(n);
    int next = 2;
    for (int l : lengths) {
        int prev = 0;
        for (int k = 1; k < l; ++k) {
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, 1);
    }
    return std::move(b).build();
}

std::vector<Graph> lemma_corpus() {
    std::vector<Graph> out = test::berge_corpus(6, 8);
    ComposeRecipe r;
    r.min_vertices = 8;
    r.max_vertices = 12;
    for (Graph& g : test::composed_corpus(1, 60, r)) out.push_back(std::move(g));
    return out;
}

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> c = lemma_corpus();
    return c;
}

bool has_end_in_each(const InducedPath& p, const VertexSet& a, const VertexSet& b) {
    const int s = p.vertices.front(), t = p.vertices.back();
    return (a.contains(s) && b.contains(t)) || (a.contains(t) && b.contains(s));
}

}  // namespace

TEST(Verify2JoinTest, Examples) {
    Graph c8 = fam::cycle(8);
    EXPECT_TRUE(verify_2join(c8, c8_split()));
    CheckReport bad = verify_2join(c8, split(8, {0, 1, 2, 3}, {3}, {0}, {4, 5}, {7}));
    EXPECT_FALSE(bad);
    EXPECT_FALSE(bad.violation.empty());
    Graph dt = fam::double_theta();
    EXPECT_TRUE(verify_2join(dt, split(12, {0, 1, 2, 3, 4, 5}, {0}, {3}, {6}, {9})));
}

TEST(Classify2JoinTest, C8) {
    TwoJoinClass k = classify_2join(fam::cycle(8), c8_split());
    EXPECT_TRUE(k.connected);
    EXPECT_TRUE(k.substantial);
    EXPECT_TRUE(k.proper);
    EXPECT_EQ(k.path_side, PathSide::both);
    EXPECT_EQ(k.parity, JoinParity::odd);
    EXPECT_FALSE(k.degenerate());
    EXPECT_FALSE(k.cutting1);
}

TEST(Classify2JoinTest, C6NotSubstantial) {
    TwoJoinClass k = classify_2join(fam::cycle(6), split(6, {0, 1, 2}, {2}, {0}, {3}, {5}));
    EXPECT_FALSE(k.substantial);
    EXPECT_FALSE(k.proper);
}

TEST(Classify2JoinTest, SquarePairDegenerateItem5) {
    Graph sp = fam::square_pair();
    TwoJoinSplit s = split(8, {0, 1, 2, 3}, {0}, {2}, {4}, {6});
    ASSERT_TRUE(verify_2join(sp, s));
    TwoJoinClass k = classify_2join(sp, s);
    EXPECT_NE(std::find(k.degenerate_items.begin(), k.degenerate_items.end(), 5), k.degenerate_items.end());
}

TEST(Classify2JoinTest, DisconnectedParityUndefined) {
    // X2 = two separate edges between A2 and B2 is fine; X2 with a vertex of A2 cut off is not connected
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {4, 6}});
    TwoJoinSplit s = split(7, {0, 1, 2, 3}, {0}, {3}, {4, 5}, {6});
    ASSERT_TRUE(verify_2join(g, s));
    TwoJoinClass k = classify_2join(g, s);
    EXPECT_FALSE(k.connected);
    EXPECT_FALSE(k.proper);
    EXPECT_EQ(k.parity, JoinParity::undefined);
}

TEST(Classify2JoinTest, CuttingType1) {
    // A2 = {4,5}, B2 = {6}; X2 - B2 = {4,5} is disconnected
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {4, 6}, {5, 6}});
    TwoJoinClass k = classify_2join(g, split(7, {0, 1, 2, 3}, {0}, {3}, {4, 5}, {6}));
    EXPECT_EQ(k.path_side, PathSide::x1);
    EXPECT_TRUE(k.cutting1);
    EXPECT_FALSE(classify_2join(cut2_graph(), cut2_split()).cutting1);
}

TEST(PathTwoJoinTest, PathDoubleSplit) {
    Graph g = fam::pds22_len5();
    std::vector<ClassifiedSplit> found = find_path_2joins(g);
    ASSERT_EQ(found.size(), 1U);
    const ClassifiedSplit& c = found[0];
    TwoJoinSplit s = c.split;
    if (s.x1.size() != 6) s = s.swapped();
    EXPECT_EQ(s.x1, vs(12, {0, 2, 8, 9, 10, 11}));
    EXPECT_TRUE(c.cls.proper);
    EXPECT_EQ(c.cls.parity, JoinParity::odd);
    EXPECT_TRUE(c.from_flat_path);
}

TEST(PathTwoJoinTest, CycleCuts) {
    std::vector<ClassifiedSplit> found = find_path_2joins(fam::cycle(8));
    EXPECT_EQ(found.size(), 4U);
    for (const ClassifiedSplit& c : found) {
        EXPECT_FALSE(c.from_flat_path);
        EXPECT_EQ(c.split.x1.size(), 4);
        EXPECT_TRUE(c.cls.proper);
    }
    EXPECT_TRUE(find_path_2joins(fam::complete(4)).empty());
}

TEST(NonpathSearchTest, DoubleTheta) {
    Graph dt = fam::double_theta();
    TwoJoinSearch r = find_nonpath_proper_2join(dt);
    ASSERT_TRUE(r.found.has_value());
    EXPECT_TRUE(verify_2join(dt, r.found->split));
    EXPECT_TRUE(r.found->cls.proper);
    EXPECT_FALSE(r.found->cls.is_path());
    // the split between the two 6-cycles is among the oracle's
    TwoJoinSplit cycles = split(12, {0, 1, 2, 3, 4, 5}, {0}, {3}, {6}, {9});
    bool seen = false;
    for (const ClassifiedSplit& c : bruteforce_2join_oracle(dt))
        if (c.split == cycles) {
            seen = true;
            EXPECT_TRUE(c.cls.proper);
            EXPECT_EQ(c.cls.path_side, PathSide::none);
        }
    EXPECT_TRUE(seen);
}

TEST(NonpathSearchTest, HoleHasNone) { EXPECT_FALSE(find_nonpath_proper_2join(fam::cycle(8)).found.has_value()); }

TEST(NonpathSearchTest, PathDoubleSplitAgreesWithOracle) {
    // the oracle finds a proper non-path 2-join here, so the search must too
    Graph g = fam::pds22_len5();
    bool oracle = false;
    for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) oracle = oracle || (c.cls.proper && !c.cls.is_path());
    EXPECT_TRUE(oracle);
    EXPECT_EQ(find_nonpath_proper_2join(g).found.has_value(), oracle);
}

TEST(OracleTest, Examples) {
    std::vector<ClassifiedSplit> c6 = bruteforce_2join_oracle(fam::cycle(6));
    EXPECT_FALSE(c6.empty());
    for (const ClassifiedSplit& c : c6) EXPECT_FALSE(c.cls.substantial);
    EXPECT_TRUE(bruteforce_2join_oracle(fam::complete(4)).empty());
    EXPECT_THROW(bruteforce_2join_oracle(fam::cycle(13)), GuardExceeded);
}

TEST(OracleTest, NonpathSearchAgreesOnSmallGraphs) {
    test::SmallGraphLevels lv = test::generate_connected(7, false);
    for (int n = 4; n <= 7; ++n)
        for (std::uint64_t code : lv.levels[n]) {
            Graph g = test::from_code(code).to_graph();
            bool oracle = false;
            for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) oracle = oracle || (c.cls.proper && !c.cls.is_path());
            EXPECT_EQ(find_nonpath_proper_2join(g).found.has_value(), oracle) << "code " << code;
        }
}

TEST(OracleTest, NonpathSearchAgreesOnCorpus) {
    int with = 0;
    for (const Graph& g : corpus()) {
        bool oracle = false;
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) oracle = oracle || (c.cls.proper && !c.cls.is_path());
        with += oracle ? 1 : 0;
        EXPECT_EQ(find_nonpath_proper_2join(g).found.has_value(), oracle);
    }
    EXPECT_GT(with, 20);
}

TEST(CuttingType2Test, Fixture) {
    Graph g = cut2_graph();
    ASSERT_TRUE(verify_2join(g, cut2_split()));
    ASSERT_TRUE(is_berge_bruteforce(g).berge);
    CuttingType2Report r = verify_cutting_type2(g, cut2_split(), vs(8, {4}), vs(8, {7}));
    EXPECT_TRUE(r.decided);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.first_failure(), 0);
    EXPECT_EQ(cutting_type2_exhaustive(g, cut2_split()), Verdict3::yes);
}

TEST(CuttingType2Test, MissingEdgeFailsItem3) {
    Graph g = cut2_graph();
    GraphBuilder b(8);
    for (auto [u, v] : g.edges())
        if (!(u == 4 && v == 7)) b.add_edge(u, v);
    Graph h = std::move(b).build();
    CuttingType2Report r = verify_cutting_type2(h, cut2_split(), vs(8, {4}), vs(8, {7}));
    EXPECT_FALSE(r.holds());
    EXPECT_EQ(r.first_failure(), 3);
}

TEST(CuttingType2Test, ConnectedRemainderIsAlmostCutting) {
    Graph g = cut2_graph();
    GraphBuilder b(8);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    b.add_edge(5, 6);
    Graph h = std::move(b).build();
    CuttingType2Report r = verify_cutting_type2(h, cut2_split(), vs(8, {4}), vs(8, {7}));
    EXPECT_TRUE(r.almost());
    EXPECT_FALSE(r.items[5]);
    EXPECT_FALSE(r.holds());
}

TEST(CuttingType2Test, HoleIsNotCutting) {
    EXPECT_EQ(cutting_type2_exhaustive(fam::cycle(8), c8_split()), Verdict3::no);
}

TEST(BlocksTest, C8) {
    Blocks b = build_blocks(fam::cycle(8), c8_split());
    EXPECT_TRUE(isomorphic(b.g1.graph, fam::cycle(6)));
    EXPECT_TRUE(isomorphic(b.g2.graph, fam::cycle(6)));
    EXPECT_EQ(std::count(b.g1.to_parent.begin(), b.g1.to_parent.end(), -1), 2);
}

TEST(BlocksTest, PathDoubleSplit) {
    Graph g = fam::pds22_len5();
    TwoJoinSplit s = split(12, {0, 2, 8, 9, 10, 11}, {0}, {2}, {4, 5}, {6, 7});
    ASSERT_TRUE(verify_2join(g, s));
    Blocks b = build_blocks(g, s);
    EXPECT_TRUE(isomorphic(b.g1.graph, fam::cycle(10)));
    EXPECT_TRUE(isomorphic(b.g2.graph, fam::double_split(2, 2)));
}

TEST(BlocksTest, DoubleTheta) {
    Graph dt = fam::double_theta();
    Blocks b = build_blocks(dt, split(12, {0, 1, 2, 3, 4, 5}, {0}, {3}, {6}, {9}));
    // the new path of length 3 plus its two attaching edges is an a1-b1 path of length 5
    EXPECT_EQ(b.g1.graph.vertex_count(), 10);
    EXPECT_TRUE(isomorphic(b.g1.graph, theta({3, 3, 5})));
    EXPECT_TRUE(isomorphic(b.g2.graph, theta({3, 3, 5})));
}

TEST(BlocksTest, RejectsNonProper) {
    EXPECT_THROW(build_blocks(fam::cycle(6), split(6, {0, 1, 2}, {2}, {0}, {3}, {5})), PreconditionError);
}

TEST(ContractTest, Examples) {
    EXPECT_TRUE(isomorphic(contract_path_side(fam::cycle(8), c8_split()).graph, fam::cycle(6)));
    Graph g = fam::pds22_len5();
    TwoJoinSplit s = split(12, {0, 2, 8, 9, 10, 11}, {0}, {2}, {4, 5}, {6, 7});
    EXPECT_TRUE(isomorphic(contract_path_side(g, s).graph, fam::double_split(2, 2)));
    EXPECT_TRUE(isomorphic(contract_path_side(g, s).graph, build_blocks(g, s).g2.graph));
}

TEST(ContractTest, EvenParity) {
    // path 0..4 of length 4 on a 4-cycle 5 6 7 8 (A2 = {5}, B2 = {7})
    Graph g = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {4, 7}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
    TwoJoinSplit s = split(9, {0, 1, 2, 3, 4}, {0}, {4}, {5}, {7});
    ASSERT_TRUE(verify_2join(g, s));
    EXPECT_EQ(classify_2join(g, s).parity, JoinParity::even);
    Block c = contract_path_side(g, s);
    // 0 - new - 4 - 7, 7 to 5 both ways round the square, 5 - 0
    Graph want = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 5}, {5, 0}});
    EXPECT_TRUE(isomorphic(c.graph, want));
    EXPECT_TRUE(isomorphic(c.graph, build_blocks(g, s).g2.graph));
}

TEST(LemmaTest, SameParityAcrossSides) {
    for (const Graph& g : corpus())
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) {
            if (!c.cls.connected) continue;
            const TwoJoinSplit& s = c.split;
            int parity = -1;
            for (const TwoJoinSplit& t : {s, s.swapped()}) {
                PathList l = enumerate_induced_paths(g, PathQuery{t.a1 | t.b1, t.c1(), Parity::any, 1});
                for (const InducedPath& p : l.paths) {
                    if (!has_end_in_each(p, t.a1, t.b1)) continue;
                    if (parity < 0) parity = p.length() % 2;
                    EXPECT_EQ(p.length() % 2, parity);
                }
            }
            EXPECT_EQ(parity == 1 ? JoinParity::odd : JoinParity::even, c.cls.parity);
        }
}

TEST(LemmaTest, OutgoingPathsWithinSidesEven) {
    for (const Graph& g : corpus()) {
        const Graph co = g.complement();
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) {
            const TwoJoinSplit& s = c.split;
            for (const VertexSet* side : {&s.a1, &s.b1, &s.a2, &s.b2}) {
                for (const InducedPath& p :
                     enumerate_induced_paths(g, PathQuery{*side, g.vertices() - *side, Parity::odd, 2}).paths)
                    ADD_FAILURE() << "odd outgoing path of length " << p.length();
                for (const InducedPath& p :
                     enumerate_induced_paths(co, PathQuery{g.vertices() - *side, *side, Parity::odd, 2}).paths)
                    ADD_FAILURE() << "odd antipath of length " << p.length();
            }
        }
    }
}

TEST(LemmaTest, BlocksOfBergeGraphsAreBerge) {
    int checked = 0;
    for (const Graph& g : corpus())
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) {
            if (!c.cls.proper) continue;
            Blocks b = build_blocks(g, c.split);
            EXPECT_TRUE(is_berge_bruteforce(b.g1.graph).berge);
            EXPECT_TRUE(is_berge_bruteforce(b.g2.graph).berge);
            ++checked;
        }
    EXPECT_GT(checked, 50);
}

TEST(LemmaTest, DegenerateSubstantialGivesBsp) {
    int checked = 0;
    for (const Graph& g : corpus())
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) {
            if (!c.cls.substantial || !c.cls.degenerate()) continue;
            ++checked;
            EXPECT_TRUE(has_bsp_bruteforce(g));
            if (c.cls.proper) {
                Blocks b = build_blocks(g, c.split);
                EXPECT_TRUE(has_bsp_bruteforce(b.g1.graph, 18) || has_bsp_bruteforce(b.g2.graph, 18));
            }
        }
    EXPECT_GT(checked, 0);
}

TEST(LemmaTest, NonCuttingTwoJoinTransfersBsp) {
    int checked = 0;
    for (const Graph& g : corpus()) {
        std::optional<bool> whole;
        for (const ClassifiedSplit& c : bruteforce_2join_oracle(g)) {
            if (!c.cls.proper || c.cls.cutting1) continue;
            if (cutting_type2_exhaustive(g, c.split) != Verdict3::no) continue;
            if (!whole) whole = has_bsp_bruteforce(g);
            Blocks b = build_blocks(g, c.split);
            const bool blocks = has_bsp_bruteforce(b.g1.graph, 18) || has_bsp_bruteforce(b.g2.graph, 18);
            EXPECT_EQ(*whole, blocks);
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}
