#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tutte/json_io.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;

namespace {

struct PathArgs {
    std::string file;
    std::string mode = "edge";
    VertexId u = 0, v = 0;
    std::optional<VertexId> z;
    std::string e, f, g;
    bool json = false;
    bool trace = false;
};

PlaneGraph read_graph(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw PreconditionError("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_plane_graph(buf.str());
}

std::optional<Edge> parse_edge(const std::string& s, const char* flag) {
    if (s.empty()) return std::nullopt;
    const auto dash = s.find('-');
    try {
        if (dash == std::string::npos) throw std::invalid_argument(s);
        std::size_t used_a = 0, used_b = 0;
        const std::string sa = s.substr(0, dash), sb = s.substr(dash + 1);
        const VertexId a = std::stoi(sa, &used_a), b = std::stoi(sb, &used_b);
        if (used_a != sa.size() || used_b != sb.size() || a == b) throw std::invalid_argument(s);
        return Edge::of(a, b);
    } catch (const std::logic_error&) {
        throw PreconditionError(std::string("--") + flag + " expects A-B, got '" + s + "'");
    }
}

Case make_case(const PathArgs& a) {
    Case c;
    c.in.u = a.u;
    c.in.v = a.v;
    c.in.z = a.z;
    c.in.e = parse_edge(a.e, "e");
    c.in.f = parse_edge(a.f, "f");
    c.g_edge = parse_edge(a.g, "g");
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw PreconditionError("--mode " + a.mode + " needs " + what);
    };
    if (a.mode == "edge") {
        c.op = Op::edge;
        need(c.in.e.has_value(), "--e");
    } else if (a.mode == "vertex") {
        c.op = Op::vertex;
        need(c.in.z.has_value(), "--z");
    } else if (a.mode == "two-edge") {
        c.op = Op::two_edge;
        need(c.in.e && c.in.f, "--e and --f");
    } else if (a.mode == "vertex-edge") {
        c.op = Op::vertex_edge;
        need(c.in.e && c.in.z, "--e and --z");
    } else if (a.mode == "cycle3") {
        c.op = Op::cycle3;
        need(c.in.e && c.in.f && c.g_edge, "--e, --f and --g");
    } else {
        throw PreconditionError("unknown mode " + a.mode);
    }
    if (c.op != Op::cycle3) need(a.u != 0 && a.v != 0, "--u and --v");
    return c;
}

void add_path_flags(CLI::App* cmd, PathArgs& a) {
    cmd->add_option("file", a.file, "plane-graph file")->required();
    cmd->add_option("--mode", a.mode, "edge | vertex | two-edge | vertex-edge | cycle3")
        ->check(CLI::IsMember({"edge", "vertex", "two-edge", "vertex-edge", "cycle3"}));
    cmd->add_option("--u", a.u, "start vertex");
    cmd->add_option("--v", a.v, "end vertex");
    cmd->add_option("--z", a.z, "vertex the path must visit");
    cmd->add_option("--e", a.e, "outer edge A-B");
    cmd->add_option("--f", a.f, "second outer edge A-B");
    cmd->add_option("--g", a.g, "third facial edge A-B (cycle3)");
    cmd->add_flag("--json", a.json, "print JSON");
    cmd->add_flag("--trace", a.trace, "include the construction trace");
}

void print_result(const TutteResult& r, bool trace) {
    std::cout << (r.cycle ? "cycle:" : "path:");
    for (VertexId w : r.path) std::cout << ' ' << w;
    std::cout << "\n";
    const auto& rep = r.report;
    std::cout << "kind " << to_string(r.kind) << ", n = " << rep.n << "\n";
    std::cout << "b(P) = " << rep.bridge_count << ", beta = " << rep.beta << ", tau =";
    for (Thirds t : rep.tau_terms) std::cout << ' ' << t;
    std::cout << "\n3 b(P) = " << 3 * rep.bridge_count << " thirds, budget = " << rep.budget.value() << " thirds: "
              << (rep.satisfied ? "satisfied" : "VIOLATED") << "\n";
    if (r.cycle)
        std::cout << "length " << r.cycle->length << ", required " << r.cycle->required
                  << (r.cycle->degenerate ? " (degenerate, bound not asserted)" : r.cycle->holds ? " (holds)" : " (FAILS)")
                  << "\n";
    if (trace)
        for (const auto& line : r.trace) std::cout << "  " << line << "\n";
}

int cmd_validate(const std::string& file) {
    const PlaneGraph g = read_graph(file);
    std::cout << "n = " << g.num_vertices() << ", m = " << g.num_edges() << ", faces = " << g.num_faces() << "\n";
    std::cout << "outer walk:";
    for (VertexId w : g.outer_walk()) std::cout << ' ' << w;
    std::cout << "\n";
    const CircuitCheck cc = is_circuit_graph(g);
    std::cout << "circuit graph: " << (cc.circuit ? "yes" : "no (" + to_string(cc.reason) + ")");
    if (cc.witness_cut) std::cout << ", cut {" << cc.witness_cut->first << ", " << cc.witness_cut->second << "}";
    std::cout << "\n";
    if (cc.circuit && g.num_vertices() <= 40) {
        const auto p = connectivity_profile(g);
        std::cout << "connectivity " << p.kappa << (p.essentially_4 ? ", essentially 4-connected" : "") << "\n";
    }
    return cc.circuit ? 0 : 1;
}

int cmd_path(const PathArgs& a) {
    const PlaneGraph g = read_graph(a.file);
    const TutteResult r = run_case(g, make_case(a), {});
    if (a.json)
        std::cout << to_json(r, a.trace).dump(2) << "\n";
    else
        print_result(r, a.trace);
    return r.report.satisfied ? 0 : 1;
}

int cmd_verify(const PathArgs& a, bool use_oracle, std::size_t cap) {
    const PlaneGraph g = read_graph(a.file);
    const Case c = make_case(a);
    EngineOptions o;
    o.verify = false;
    const TutteResult r = run_case(g, c, o);
    const std::string why = detail::judge(g, c, r, use_oracle && g.num_vertices() <= cap, cap);
    nlohmann::json j = to_json(r, a.trace);
    j["verified"] = why.empty();
    if (!why.empty()) j["problem"] = why;
    if (use_oracle) {
        const bool enumerate = g.num_vertices() <= cap;
        if (c.op == Op::cycle3)
            j["oracle"] = to_json(oracle::verify_cycle(a.file, g, {*c.in.e, *c.in.f, *c.g_edge}, r.path, enumerate, cap));
        else
            j["oracle"] = to_json(oracle::verify_instance(a.file, g, r.kind, r.instance, r.path, r.report, enumerate, cap));
    }
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_result(r, a.trace);
        if (use_oracle) {
            const auto& oj = j["oracle"];
            if (oj.contains("valid_paths") && !oj["valid_paths"].is_null())
                std::cout << "oracle: " << oj["valid_paths"] << " valid paths, minimum b(P) = " << oj["min_bridge_count"]
                          << "\n";
            if (oj.contains("max_length") && !oj["max_length"].is_null())
                std::cout << "oracle: " << oj["cycles"] << " cycles, longest " << oj["max_length"] << "\n";
            if (g.num_vertices() > cap) std::cout << "oracle: enumeration skipped above n = " << cap << "\n";
        }
        std::cout << (why.empty() ? "verified" : "PROBLEM: " + why) << "\n";
    }
    return why.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tutte paths in circuit graphs"};
    app.require_subcommand(1);

    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "check the embedding and the circuit-graph condition");
    validate->add_option("file", validate_file)->required();

    PathArgs path_args;
    auto* path = app.add_subcommand("path", "construct a Tutte path or cycle");
    add_path_flags(path, path_args);

    PathArgs verify_args;
    bool use_oracle = false;
    std::size_t cap = oracle::default_cap;
    auto* verify = app.add_subcommand("verify", "construct, then re-check with measures and optionally the oracle");
    add_path_flags(verify, verify_args);
    verify->add_flag("--oracle", use_oracle, "cross-check with the brute-force oracle");
    verify->add_option("--cap", cap, "largest n the oracle enumerates");

    std::string family = "stacked", out_file;
    int n = 8;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a plane graph");
    gen->add_option("--family", family, "stacked | wheel | prism | antiprism | octahedron | random_circuit");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out_file, "write here instead of stdout");

    StressOptions so;
    bool stress_json = false;
    std::vector<std::string> families, ops;
    std::string mutation = "none", failures;
    auto* st = app.add_subcommand("stress", "run the randomized harness");
    st->add_option("--nmax", so.nmax);
    st->add_option("--count", so.count, "instances per family");
    st->add_option("--seed", so.seed);
    st->add_option("--families", families, "subset of families")->delimiter(',');
    st->add_option("--ops", ops, "subset of edge, vertex, two-edge, split, vertex-edge, cycle3")->delimiter(',');
    st->add_option("--tuples", so.tuples, "cases per op and instance (0: all)");
    st->add_option("--cap", so.oracle_cap, "largest n the oracle enumerates");
    st->add_option("--mutation", mutation, "none | tau-case-order | count-trivial-bridges | drop-beta")
        ->check(CLI::IsMember({"none", "tau-case-order", "count-trivial-bridges", "drop-beta"}));
    st->add_option("--failures", failures, "directory for failing instances");
    st->add_flag("--json", stress_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(validate_file);
        if (*path) return cmd_path(path_args);
        if (*verify) return cmd_verify(verify_args, use_oracle, cap);
        if (*gen) {
            const std::string text = serialize(generate({family_from_string(family), n, seed}));
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_file) << text;
            }
            return 0;
        }
        if (*st) {
            if (!families.empty()) {
                so.families.clear();
                for (const auto& f : families) so.families.push_back(family_from_string(f));
            }
            if (!ops.empty()) {
                so.ops.clear();
                for (const auto& name : ops) {
                    bool found = false;
                    for (Op op : all_ops())
                        if (to_string(op) == name) {
                            so.ops.push_back(op);
                            found = true;
                        }
                    if (!found) throw PreconditionError("unknown op " + name);
                }
            }
            if (mutation == "tau-case-order") so.mutation = Mutation::tau_case_order;
            if (mutation == "count-trivial-bridges") so.mutation = Mutation::count_trivial_bridges;
            if (mutation == "drop-beta") so.mutation = Mutation::drop_beta;
            if (!failures.empty()) so.failure_dir = failures;
            const StressSummary s = stress(so, stress_json ? std::function<void(const std::string&)>{}
                                                           : [](const std::string& line) { std::cerr << line << "\n"; });
            if (stress_json) {
                std::cout << to_json(s).dump(2) << "\n";
            } else {
                std::cout << s.instances << " instances, " << s.cases << " cases, " << s.violations << " violations ("
                          << s.enumerated << " checked by enumeration, " << s.enumeration_skipped << " above the cap) in "
                          << s.seconds << " s\n";
                for (const auto& [name, os] : s.ops)
                    std::cout << "  " << name << ": " << os.cases << " cases, " << os.violations << " violations\n";
                for (const auto& f : s.files) std::cout << "  wrote " << f << "\n";
            }
            return s.violations == 0 ? 0 : 1;
        }
    } catch (const ContractError& ex) {
        std::cerr << "contract breach: " << ex.what() << "\n";
        for (const auto& line : ex.trace()) std::cerr << "  " << line << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
