#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace tutte;

TEST(PlaneGraph, TriangleHasTwoFaces) {
    const auto g = load_plane_graph("planegraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 1 2 3\n");
    EXPECT_EQ(g.num_faces(), 2u);
    EXPECT_TRUE(g.outer_is_cycle());
}

TEST(PlaneGraph, K4SatisfiesEuler) {
    const auto g = fx::k4();
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.num_edges(), 6u);
    EXPECT_EQ(g.num_faces(), 4u);
    EXPECT_EQ(g.outer_walk(), (std::vector<VertexId>{1, 2, 3}));
}

TEST(PlaneGraph, UnknownNeighbourRejected) {
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 3\n1: 2 5\n2: 3 1\n3: 1 2\nouter: 1 2 3\n"), Error);
}

TEST(PlaneGraph, ParseErrors) {
    EXPECT_THROW(load_plane_graph(""), ParseError);
    EXPECT_THROW(load_plane_graph("planegraph v2\nn 0\nouter:\n"), ParseError);
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 3\n1: 2 3\n2: 3 x\n3: 1 2\nouter: 1 2 3\n"), ParseError);
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 3\n1: 2 3\n1: 3 1\n3: 1 2\nouter: 1 2 3\n"), ParseError);
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\n"), ParseError);
}

TEST(PlaneGraph, OuterMustBeAFace) {
    // 1 3 2 walks the inner face of the triangle the wrong way round
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 4\n1: 2 4 3\n2: 3 4 1\n3: 1 4 2\n4: 1 2 3\nouter: 1 2 4\n"),
                 Error);
}

TEST(PlaneGraph, NonClosingRotationRejected) {
    // the asymmetric rotation 1: 2 3 4 with 4 unaware of 1
    EXPECT_THROW(load_plane_graph("planegraph v1\nn 4\n1: 2 3 4\n2: 3 1\n3: 1 2\n4: 3\nouter: 1 2 3\n"), Error);
}

TEST(PlaneGraph, CommentsAndWhitespace) {
    const auto g = load_plane_graph("# a triangle\n  planegraph v1 \n\nn 3\n1:  2 3\n2: 3 1\n# mid\n3: 1 2\nouter: 1 2 3\n");
    EXPECT_EQ(g.num_vertices(), 3u);
}

TEST(PlaneGraph, RoundTrip) {
    for (const auto& g : {fx::k4(), fx::w5(), fx::c8_nested(), prism(5), antiprism(6), stacked_triangulation(15, 4),
                          random_circuit_graph(14, 9)}) {
        const auto again = load_plane_graph(serialize(g));
        EXPECT_EQ(again.rotations(), g.rotations());
        EXPECT_EQ(again.outer_walk(), g.outer_walk());
        EXPECT_EQ(serialize(again), serialize(g));
    }
}

TEST(PlaneGraph, FaceCountMatchesEuler) {
    for (int n = 4; n <= 16; ++n) {
        const auto g = random_circuit_graph(n, static_cast<std::uint64_t>(n));
        EXPECT_EQ(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) +
                      static_cast<long>(g.num_faces()),
                  2);
        std::size_t half_edges = 0;
        for (const auto& f : g.faces()) half_edges += f.size();
        EXPECT_EQ(half_edges, 2 * g.num_edges());
    }
}

TEST(ClockwiseSegment, ReadOff) {
    const auto c = OuterCycle::of(fx::w5());
    EXPECT_EQ(clockwise_segment(c, {1, 3}), (Path{1, 2, 3}));
    EXPECT_EQ(clockwise_segment(c, {2, 2}), (Path{2}));
    EXPECT_EQ(clockwise_segment(c, {Edge::of(1, 2), 4}), (Path{2, 3, 4}));
    EXPECT_EQ(clockwise_segment(c, {3, Edge::of(5, 1)}), (Path{3, 4, 5}));
    EXPECT_EQ(clockwise_segment(c, {4, 2}), (Path{4, 5, 1, 2}));
}

TEST(ClockwiseSegment, OffCycleEndpointRejected) {
    const auto c = OuterCycle::of(fx::w5());
    EXPECT_THROW(clockwise_segment(c, {1, 6}), Error);
}

TEST(ClockwiseSegment, ComplementaryArcsCoverTheCycle) {
    const auto c = OuterCycle::of(fx::c8());
    for (VertexId x = 1; x <= 8; ++x)
        for (VertexId y = 1; y <= 8; ++y) {
            if (x == y) continue;
            const auto a = clockwise_segment(c, {x, y});
            const auto b = clockwise_segment(c, {y, x});
            EXPECT_EQ(a.size() + b.size(), 10u);
            std::set<VertexId> all(a.begin(), a.end());
            all.insert(b.begin(), b.end());
            EXPECT_EQ(all.size(), 8u);
        }
}

TEST(Surgery, AddEdgeInFaceSplitsIt) {
    const auto g = fx::prism_square_outside();
    ASSERT_EQ(g.outer_walk().size(), 4u);
    const auto h = add_edge_in_face(g, 1, 5, g.outer_face_index());
    EXPECT_EQ(h.num_faces(), g.num_faces() + 1);
    EXPECT_TRUE(h.has_edge(1, 5));
    EXPECT_EQ(h.outer_walk().size(), 3u);
}

TEST(Surgery, AddEdgeErrors) {
    const auto g = fx::prism_square_outside();
    EXPECT_THROW(add_edge_in_face(g, 1, 2, g.outer_face_index()), Error);
    EXPECT_THROW(add_edge_in_face(g, 3, 3, g.outer_face_index()), Error);
    // 3 and 6 do not both lie on the outer square
    EXPECT_THROW(add_edge_in_face(g, 3, 6, g.outer_face_index()), Error);
}

TEST(Surgery, AddThenDeleteRestoresFaces) {
    const auto g = fx::c6();
    const auto h = add_edge_in_face(g, 2, 5, 1 - g.outer_face_index());
    const auto back = delete_edge(h, 2, 5, HalfEdge{1, 2});
    auto faces = [](const PlaneGraph& x) {
        std::set<std::set<VertexId>> out;
        for (const auto& f : x.faces()) out.insert(std::set<VertexId>(f.begin(), f.end()));
        return out;
    };
    EXPECT_EQ(faces(back), faces(g));
    EXPECT_EQ(back.outer_walk(), g.outer_walk());
}

TEST(Surgery, ContractSide) {
    const auto g = fx::c6_chord();
    Separation s = fx::separation_at(g, 2, 5);
    if (!s.side_b.count(3)) std::swap(s.side_a, s.side_b);
    const auto r = contract_side(g, s, SepSide::b);
    EXPECT_EQ(r.graph.num_vertices(), 5u);
    EXPECT_EQ(r.apex, 7);  // smallest id unused in the input, so never a removed vertex
    const auto& nb = r.graph.rotation(r.apex);
    EXPECT_EQ(std::set<VertexId>(nb.begin(), nb.end()), (std::set<VertexId>{2, 5}));
    EXPECT_EQ(static_cast<long>(r.graph.num_vertices()) - static_cast<long>(r.graph.num_edges()) +
                  static_cast<long>(r.graph.num_faces()),
              2);
    EXPECT_TRUE(is_circuit_graph(r.graph).circuit);
}

TEST(Surgery, ContractKeepsTau) {
    const auto g = fx::c8_chord();
    Separation s = fx::separation_at(g, 3, 6);
    if (!s.side_b.count(4)) std::swap(s.side_a, s.side_b);
    const auto r = contract_side(g, s, SepSide::b, SeparationFilter{{1, 8}, {Edge::of(1, 2)}});
    const Endpoint u = VertexId{1}, v = VertexId{8}, e = Edge::of(1, 2);
    EXPECT_EQ(tau(g, v, u), tau(r.graph, v, u));
    EXPECT_EQ(tau(g, u, e), tau(r.graph, u, e));
    EXPECT_EQ(tau(g, e, v), tau(r.graph, e, v));
}

TEST(Surgery, ContractingMarkedSideFails) {
    const auto g = fx::c6_chord();
    Separation s = fx::separation_at(g, 2, 5);
    if (!s.side_b.count(1)) std::swap(s.side_a, s.side_b);
    EXPECT_THROW(contract_side(g, s, SepSide::b, SeparationFilter{{1}, {}}), Error);
}

TEST(Surgery, MirrorReversesOuterCycle) {
    const auto g = fx::w5();
    const auto m = mirror(g);
    auto w = g.outer_walk();
    std::set<VertexId> a(w.begin(), w.end());
    const auto mw = m.outer_walk();
    EXPECT_EQ(std::set<VertexId>(mw.begin(), mw.end()), a);
    const auto mc = OuterCycle::of(m);
    EXPECT_EQ(mc.next(1), 5);
}
