#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace tutte;

namespace {

std::set<std::pair<VertexId, VertexId>> cuts(const std::vector<Separation>& seps) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const auto& s : seps) out.insert(s.cut);
    return out;
}

}  // namespace

TEST(TwoSeparations, NoneIn3Connected) {
    EXPECT_TRUE(two_separations(fx::k4()).empty());
    EXPECT_TRUE(two_separations(fx::w5()).empty());
    EXPECT_TRUE(two_separations(antiprism(5)).empty());
}

TEST(TwoSeparations, HexagonWithChord) {
    const auto seps = two_separations(fx::c6_chord());
    // the chord's cut, plus the two diagonals of each 4-cycle beside it
    EXPECT_EQ(cuts(seps), (std::set<std::pair<VertexId, VertexId>>{{1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}}));
    bool found = false;
    for (const auto& s : seps)
        if (s.cut == std::pair<VertexId, VertexId>{2, 5}) {
            found = true;
            EXPECT_EQ(s.interior_a(), (std::set<VertexId>{1, 6}));
            EXPECT_EQ(s.interior_b(), (std::set<VertexId>{3, 4}));
        }
    EXPECT_TRUE(found);
}

TEST(TwoSeparations, NestedChordsMaximal) {
    // 1 and 8 alone may sit in a cut, so 1-7 and 2-8 swallow the chords
    const auto loose = two_separations(fx::c8_nested(), SeparationFilter{{1, 8}, {}}, true);
    EXPECT_EQ(cuts(loose), (std::set<std::pair<VertexId, VertexId>>{{1, 7}, {2, 8}}));
    const SeparationFilter keep{{1, 8}, {Edge::of(1, 2), Edge::of(7, 8)}};
    const auto all = two_separations(fx::c8_nested(), keep);
    const auto max = two_separations(fx::c8_nested(), keep, true);
    EXPECT_TRUE(cuts(all).count({3, 6}));
    EXPECT_EQ(cuts(max), (std::set<std::pair<VertexId, VertexId>>{{2, 7}}));
    for (const auto& s : max) {
        EXPECT_TRUE(s.side_a.count(1));
        EXPECT_TRUE(s.side_a.count(8));
    }
}

TEST(TwoSeparations, SidesReassemble) {
    for (const auto& g : {fx::c8_nested(), random_circuit_graph(10, 2), random_circuit_graph(11, 5)}) {
        for (const auto& s : two_separations(g)) {
            std::set<VertexId> all = s.side_a;
            all.insert(s.side_b.begin(), s.side_b.end());
            EXPECT_EQ(all.size(), g.num_vertices());
            EXPECT_FALSE(s.interior_a().empty());
            EXPECT_FALSE(s.interior_b().empty());
            for (const Edge& e : g.edges()) EXPECT_NE(s.edge_in_a(e), s.edge_in_b(e)) << to_string(e);
        }
    }
}

TEST(TwoSeparations, RequiresTwoConnected) {
    Rotations rot{{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2, 4}}, {4, {3}}};
    EXPECT_THROW(two_separations(PlaneGraph::build(rot, HalfEdge{1, 2})), Error);
}

TEST(CircuitGraph, Fixtures) {
    EXPECT_TRUE(is_circuit_graph(fx::w5()).circuit);
    EXPECT_TRUE(is_circuit_graph(fx::c6_chord()).circuit);
    // outer C4 with a pendant pair {5, 6} hanging off the cut {1, 2}
    Rotations rot{{1, {2, 5, 6, 4}}, {2, {3, 6, 5, 1}}, {3, {4, 2}}, {4, {1, 3}}, {5, {1, 2, 6}}, {6, {1, 5, 2}}};
    const auto g = PlaneGraph::build(rot, std::vector<VertexId>{1, 2, 3, 4});
    const auto cc = is_circuit_graph(g);
    EXPECT_FALSE(cc.circuit);
    EXPECT_EQ(cc.reason, CircuitStatus::component_off_outer_cycle);
    ASSERT_TRUE(cc.witness_cut);
    EXPECT_EQ(*cc.witness_cut, (std::pair<VertexId, VertexId>{1, 2}));
}

TEST(CircuitGraph, NotTwoConnected) {
    Rotations rot{{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2, 4}}, {4, {3}}};
    EXPECT_FALSE(is_circuit_graph(PlaneGraph::build(rot, HalfEdge{1, 2})).circuit);
}

TEST(Blocks, SharedVertex) {
    const Adjacency bowtie{{1, {2, 3}}, {2, {1, 3}}, {3, {1, 2, 4, 5}}, {4, {3, 5}}, {5, {3, 4}}};
    const auto d = blocks(bowtie);
    EXPECT_EQ(d.blocks.size(), 2u);
    EXPECT_EQ(d.cut_vertices, (std::set<VertexId>{3}));
}

TEST(Blocks, PathIsTwoEdges) {
    const Adjacency path{{1, {2}}, {2, {1, 3}}, {3, {2}}};
    const auto d = blocks(path);
    ASSERT_EQ(d.blocks.size(), 2u);
    for (const auto& b : d.blocks) EXPECT_EQ(b.edges.size(), 1u);
    EXPECT_EQ(d.cut_vertices, (std::set<VertexId>{2}));
}

TEST(Blocks, WheelMinusRimSegment) {
    // W5 without the rim vertices 4 and 5: a triangle fan 1-2-3 around the hub
    const auto adj = without(fx::w5().rotations(), {4, 5});
    const auto d = blocks(adj);
    ASSERT_EQ(d.blocks.size(), 1u);
    EXPECT_EQ(d.blocks[0].vertices, (std::set<VertexId>{1, 2, 3, 6}));
}

TEST(Blocks, PartitionEdges) {
    const auto g = random_circuit_graph(12, 3);
    const auto adj = without(g.rotations(), {g.outer_walk()[0]});
    std::multiset<Edge> seen;
    for (const auto& b : blocks(adj).blocks) seen.insert(b.edges.begin(), b.edges.end());
    std::size_t m = 0;
    for (const auto& [v, nb] : adj) m += nb.size();
    EXPECT_EQ(seen.size(), m / 2);
    EXPECT_EQ(std::set<Edge>(seen.begin(), seen.end()).size(), seen.size());
}

TEST(Goodness, Fixtures) {
    const auto w = fx::w5();
    const auto cw = OuterCycle::of(w);
    // the only 2-separations split off a single rim edge, so a segment is
    // spoiled exactly when it runs the whole rim
    for (VertexId x = 1; x <= 5; ++x)
        for (VertexId y = 1; y <= 5; ++y)
            EXPECT_EQ(is_good_segment(w, cw, {x, y}), cw.arc(x, y).size() < 5) << x << " " << y;
    const auto g = fx::c6_chord();
    const auto c = OuterCycle::of(g);
    EXPECT_FALSE(is_good_segment(g, c, {2, 5}));
    EXPECT_FALSE(is_good_segment(g, c, {5, 2}));
    EXPECT_TRUE(is_good_segment(g, c, {2, 3}));
}

TEST(Goodness, MonotoneUnderContainment) {
    for (const auto& g : {fx::c8_nested(), random_circuit_graph(9, 1), random_circuit_graph(10, 4)}) {
        const auto c = OuterCycle::of(g);
        const auto cv = c.vertices();
        for (VertexId x : cv)
            for (VertexId y : cv) {
                if (!is_good_segment(g, c, {x, y})) continue;
                const auto arc = c.arc(x, y);
                for (std::size_t i = 0; i < arc.size(); ++i)
                    for (std::size_t j = i; j < arc.size(); ++j)
                        EXPECT_TRUE(is_good_segment(g, c, {arc[i], arc[j]}));
            }
    }
}

TEST(ConnectivityProfile, Fixtures) {
    const auto oct = connectivity_profile(generate({Family::octahedron, 6, 0}));
    EXPECT_EQ(oct.kappa, 4);
    EXPECT_TRUE(oct.essentially_4);
    const auto pr = connectivity_profile(prism(3));
    EXPECT_EQ(pr.kappa, 3);
    EXPECT_TRUE(pr.essentially_4);
    const auto ch = connectivity_profile(fx::c6_chord());
    EXPECT_EQ(ch.kappa, 2);
    EXPECT_FALSE(ch.essentially_4);
    EXPECT_EQ(connectivity_profile(antiprism(4)).kappa, 4);
}
