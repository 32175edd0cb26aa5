#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace tutte;

TEST(Enumerate, Triangle) {
    const auto ps = oracle::enumerate_tutte_paths(fx::k3(), 1, 3, {Edge::of(1, 2)}, {});
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_EQ(ps[0], (Path{1, 2, 3}));
}

TEST(Enumerate, K4) {
    const auto g = fx::k4();
    const auto ps = oracle::enumerate_tutte_paths(g, 1, 3, {Edge::of(1, 2)}, {});
    EXPECT_NE(std::find(ps.begin(), ps.end(), Path{1, 2, 4, 3}), ps.end());
    EXPECT_NE(std::find(ps.begin(), ps.end(), Path{1, 2, 3}), ps.end());
    for (const auto& p : ps) EXPECT_TRUE(is_tutte(g, Subgraph::of_path(p)));
}

TEST(Enumerate, WheelZeroBridgePathsHoldHub) {
    const auto g = fx::w5();
    const auto ps = oracle::enumerate_tutte_paths(g, 1, 5, {Edge::of(2, 3), Edge::of(3, 4)}, {});
    ASSERT_FALSE(ps.empty());
    for (const auto& p : ps)
        if (bridge_count(g, Subgraph::of_path(p)) == 0) EXPECT_TRUE(fx::contains(p, 6));
}

TEST(Enumerate, Deterministic) {
    const auto g = random_circuit_graph(9, 4);
    const auto w = g.outer_walk();
    EXPECT_EQ(oracle::enumerate_tutte_paths(g, w[0], w[1], {}, {}), oracle::enumerate_tutte_paths(g, w[0], w[1], {}, {}));
}

TEST(Enumerate, CapExceeded) {
    const auto g = stacked_triangulation(13, 1);
    EXPECT_THROW(oracle::enumerate_tutte_paths(g, 1, 2, {}, {}), oracle::CapExceeded);
    EXPECT_NO_THROW(oracle::enumerate_tutte_paths(g, 1, 2, {Edge::of(1, 2)}, {}, 13));
}

TEST(Enumerate, CompleteBySubsetCount) {
    // same set counted a second way, grouped by vertex set
    int checked = 0;
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t s = 0; s < 5; ++s)
            for (const auto& g : {random_circuit_graph(n, s), stacked_triangulation(n, s)}) {
                const auto cv = g.outer_walk();
                for (VertexId u : g.vertices())
                    for (VertexId v : g.vertices()) {
                        if (u >= v) continue;
                        const std::vector<Edge> must{Edge::of(cv[0], cv[1])};
                        const std::vector<VertexId> through{cv.back()};
                        EXPECT_EQ(static_cast<long>(oracle::enumerate_tutte_paths(g, u, v, {}, {}).size()),
                                  oracle::count_tutte_paths_by_subsets(g, u, v, {}, {}));
                        EXPECT_EQ(static_cast<long>(oracle::enumerate_tutte_paths(g, u, v, must, through).size()),
                                  oracle::count_tutte_paths_by_subsets(g, u, v, must, through));
                        ++checked;
                    }
            }
    EXPECT_GT(checked, 300);
}

TEST(Predicate, AgreesWithMeasuresOnRandomPairs) {
    // 10^4 random (graph, path) pairs; paths come from random walks
    std::mt19937_64 rng(11);
    int pairs = 0, tutte = 0;
    while (pairs < 10000) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const auto g = rng() % 2 ? random_circuit_graph(n, rng()) : stacked_triangulation(n, rng());
        for (int k = 0; k < 50; ++k, ++pairs) {
            const auto vs = g.vertices();
            Path p{vs[rng() % vs.size()]};
            const std::size_t len = 1 + rng() % vs.size();
            while (p.size() < len) {
                std::vector<VertexId> next;
                for (VertexId w : g.neighbors(p.back()))
                    if (!fx::contains(p, w)) next.push_back(w);
                if (next.empty()) break;
                p.push_back(next[rng() % next.size()]);
            }
            if (p.size() < 2) p.push_back(g.neighbors(p[0]).front());
            const bool m = is_c_tutte(g, Subgraph::of_path(p));
            const oracle::detail::Adj adj = oracle::detail::adjacency(g);
            const bool o = oracle::detail::c_tutte(oracle::detail::path_bridges(adj, oracle::detail::Outer(g), p));
            ASSERT_EQ(m, o) << serialize(g);
            tutte += m;
            const bool plain = is_tutte(g, Subgraph::of_path(p));
            bool oplain = true;
            for (const auto& b : oracle::detail::path_bridges(adj, oracle::detail::Outer(g), p))
                oplain = oplain && b.feet.size() <= 3;
            ASSERT_EQ(plain, oplain);
        }
    }
    EXPECT_GT(tutte, 100);
}

TEST(Predicate, TauAgreesWithMeasures) {
    for (int n = 4; n <= 10; ++n)
        for (std::uint64_t s = 0; s < 4; ++s) {
            const auto g = random_circuit_graph(n, s);
            const auto c = OuterCycle::of(g);
            const oracle::detail::Adj adj = oracle::detail::adjacency(g);
            const oracle::detail::Outer oc(g);
            std::vector<std::pair<Endpoint, oracle::detail::End>> ends;
            for (VertexId v : c.vertices()) ends.push_back({v, oracle::detail::vertex_end(v)});
            for (const Edge& e : c.edges()) ends.push_back({e, oracle::detail::edge_end(oc, e)});
            for (const auto& [x, ox] : ends)
                for (const auto& [y, oy] : ends) {
                    if (x == y) continue;
                    EXPECT_EQ(tau(g, c, {x, y}).value(), oracle::detail::tau3(adj, oc, ox, oy))
                        << to_string(x) << " " << to_string(y) << "\n"
                        << serialize(g);
                }
        }
}

TEST(VerifyInstance, WheelTwoEdge) {
    const auto g = fx::w5();
    const auto r = tutte_path_two_edges(g, 1, 5, Edge::of(3, 4), Edge::of(2, 3));
    const auto rep = oracle::verify_instance("w5", g, r.kind, r.instance, r.path, r.report);
    EXPECT_TRUE(rep.engine_path_valid);
    EXPECT_TRUE(rep.engine_bound_satisfied);
    EXPECT_TRUE(rep.report_agrees);
    ASSERT_TRUE(rep.min_bridge_count);
    EXPECT_EQ(*rep.min_bridge_count, 0);
    EXPECT_GT(*rep.valid_paths, 0);
    EXPECT_FALSE(rep.violation());
}

TEST(VerifyInstance, CorruptedPath) {
    const auto g = fx::w5();
    auto r = tutte_path_two_edges(g, 1, 5, Edge::of(3, 4), Edge::of(2, 3));
    Path bad = r.path;
    bad.insert(bad.begin() + 1, 4);  // 1-4 is not an edge
    const auto rep = oracle::verify_instance("w5", g, r.kind, r.instance, bad, r.report);
    EXPECT_FALSE(rep.engine_path_valid);
    EXPECT_TRUE(rep.violation());
}

TEST(VerifyInstance, ReportDisagreement) {
    const auto g = fx::w5();
    auto r = tutte_path_two_edges(g, 1, 5, Edge::of(3, 4), Edge::of(2, 3));
    r.report.budget += Thirds::from_thirds(1);
    EXPECT_FALSE(oracle::verify_instance("w5", g, r.kind, r.instance, r.path, r.report).report_agrees);
}

TEST(VerifyInstance, NoCapWhenOnlyChecking) {
    const auto g = stacked_triangulation(20, 3);
    const auto r = tutte_path_two_edges(g, 1, 3, Edge::of(2, 3), Edge::of(1, 2));
    const auto rep = oracle::verify_instance("s20", g, r.kind, r.instance, r.path, r.report, false);
    EXPECT_TRUE(rep.engine_path_valid);
    EXPECT_TRUE(rep.report_agrees);
    EXPECT_FALSE(rep.valid_paths);
    EXPECT_THROW(oracle::verify_instance("s20", g, r.kind, r.instance, r.path, r.report, true), oracle::CapExceeded);
}

TEST(VerifyCycle, K4Witness) {
    const auto g = fx::k4();
    const std::vector<Edge> es{Edge::of(1, 2), Edge::of(2, 3), Edge::of(3, 1)};
    const auto r = long_cycle_three_edges(g, es[0], es[1], es[2]);
    const auto rep = oracle::verify_cycle("k4", g, es, r.path);
    EXPECT_TRUE(rep.engine_cycle_valid);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(*rep.witness, (Path{1, 2, 3}));
    EXPECT_EQ(*rep.max_length, 3);
    EXPECT_EQ(*rep.cycles, 1);
}

TEST(VerifyCycle, PrismSquare) {
    const auto g = prism(3);
    const std::vector<Edge> es{Edge::of(1, 2), Edge::of(2, 5), Edge::of(4, 5)};
    const auto r = long_cycle_three_edges(g, es[0], es[1], es[2]);
    const auto rep = oracle::verify_cycle("prism", g, es, r.path);
    EXPECT_TRUE(rep.engine_cycle_valid);
    EXPECT_GE(*rep.max_length, 5);
    EXPECT_GE(static_cast<long>(r.path.size()), 5);
}
