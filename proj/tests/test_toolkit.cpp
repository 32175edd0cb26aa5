#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>

#include "fixtures.hpp"
#include "tutte/json_io.hpp"

using namespace tutte;

TEST(Generate, WheelSixIsW5) {
    const auto g = generate({Family::wheel, 6, 0});
    EXPECT_EQ(g.rotations(), fx::w5().rotations());
    EXPECT_TRUE(is_circuit_graph(g).circuit);
}

TEST(Generate, Antiprism) {
    EXPECT_EQ(connectivity_profile(generate({Family::antiprism, 8, 0})).kappa, 4);
    EXPECT_THROW(generate({Family::antiprism, 7, 0}), PreconditionError);
    EXPECT_THROW(generate({Family::octahedron, 8, 0}), PreconditionError);
    EXPECT_THROW(family_from_string("petersen"), PreconditionError);
}

TEST(Generate, DeterministicPerSeed) {
    for (Family f : {Family::stacked, Family::random_circuit}) {
        EXPECT_EQ(serialize(generate({f, 14, 7})), serialize(generate({f, 14, 7})));
        EXPECT_NE(serialize(generate({f, 14, 7})), serialize(generate({f, 14, 8})));
    }
}

TEST(Generate, EveryFamilyRoundTripsAsCircuitGraph) {
    for (Family f : all_families())
        for (int n : detail::sizes_for(f, 14)) {
            const auto g = generate({f, n, static_cast<std::uint64_t>(n)});
            EXPECT_EQ(static_cast<int>(g.num_vertices()), n) << to_string(f);
            EXPECT_TRUE(is_circuit_graph(g).circuit) << to_string(f) << " " << n;
            EXPECT_EQ(serialize(load_plane_graph(serialize(g))), serialize(g));
        }
}

TEST(Generate, StackedIsATriangulation) {
    const auto g = stacked_triangulation(12, 3);
    EXPECT_EQ(g.num_edges(), 3 * g.num_vertices() - 6);
    EXPECT_GE(connectivity_profile(g).kappa, 3);
}

TEST(Stress, SmallRunIsClean) {
    StressOptions o;
    o.nmax = 7;
    o.count = 4;
    const auto s = stress(o);
    EXPECT_GT(s.instances, 0);
    EXPECT_GT(s.cases, 0);
    EXPECT_EQ(s.violations, 0);
    EXPECT_GT(s.enumerated, 0);
    for (Op op : all_ops()) EXPECT_TRUE(s.ops.count(to_string(op))) << to_string(op);
}

TEST(Stress, ReproducibleAndSeedSensitive) {
    StressOptions o;
    o.nmax = 8;
    o.count = 3;
    o.families = {Family::random_circuit};
    o.ops = {Op::two_edge};
    const auto a = stress(o), b = stress(o);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.instances, b.instances);
    o.seed = 2;
    o.tuples = 0;
    const auto c = stress(o);
    o.seed = 1;
    EXPECT_NE(c.cases, stress(o).cases);
}

TEST(Stress, MutationIsCaughtAndWritten) {
    const auto dir = std::filesystem::temp_directory_path() / "tuttepath_failures_test";
    std::filesystem::remove_all(dir);
    StressOptions o;
    o.nmax = 7;
    o.count = 3;
    o.ops = {Op::two_edge};
    o.mutation = Mutation::count_trivial_bridges;
    o.failure_dir = dir;
    const auto s = stress(o);
    EXPECT_GT(s.violations, 0);
    ASSERT_FALSE(s.failures.empty());
    ASSERT_FALSE(s.files.empty());
    EXPECT_TRUE(std::filesystem::exists(s.files.front()));
    std::ifstream in(s.files.front());
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NO_THROW(load_plane_graph(text));
    std::filesystem::remove_all(dir);
}

TEST(Json, ReportFieldsInThirds) {
    const auto r = tutte_path_two_edges(fx::w5(), 1, 5, Edge::of(3, 4), Edge::of(2, 3));
    const auto j = to_json(r);
    EXPECT_EQ(j["kind"], "two-edge");
    EXPECT_EQ(j["report"]["budget_thirds"], 3);
    EXPECT_EQ(j["report"]["lhs_thirds"], 0);
    EXPECT_EQ(j["report"]["tau_thirds"], nlohmann::json::array({1, 2, 1}));
    EXPECT_EQ(j["instance"]["f"], nlohmann::json::array({2, 3}));
    EXPECT_FALSE(j.contains("trace"));
    EXPECT_TRUE(to_json(r, true).contains("trace"));
}

TEST(Json, OracleAndStress) {
    const auto g = fx::w5();
    const auto r = tutte_path_two_edges(g, 1, 5, Edge::of(3, 4), Edge::of(2, 3));
    const auto j = to_json(oracle::verify_instance("w5", g, r.kind, r.instance, r.path, r.report));
    EXPECT_EQ(j["min_bridge_count"], 0);
    EXPECT_EQ(j["instance_id"], "w5");
    StressOptions o;
    o.nmax = 6;
    o.count = 1;
    const auto s = to_json(stress(o));
    for (const char* k : {"instances", "cases", "violations", "ops", "failures", "seconds"}) EXPECT_TRUE(s.contains(k)) << k;
}
