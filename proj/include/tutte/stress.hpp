#ifndef TUTTE_STRESS_HPP
#define TUTTE_STRESS_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tutte/engine.hpp"
#include "tutte/generators.hpp"
#include "tutte/oracle.hpp"

namespace tutte {

/// Engine operations exercised by the harness.
enum class Op { edge, vertex, two_edge, split, vertex_edge, cycle3 };

inline std::string to_string(Op op) {
    switch (op) {
        case Op::edge: return "edge";
        case Op::vertex: return "vertex";
        case Op::two_edge: return "two-edge";
        case Op::split: return "split";
        case Op::vertex_edge: return "vertex-edge";
        case Op::cycle3: return "cycle3";
    }
    return "?";
}

inline const std::vector<Op>& all_ops() {
    static const std::vector<Op> ops{Op::edge, Op::vertex, Op::two_edge, Op::split, Op::vertex_edge, Op::cycle3};
    return ops;
}

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> fs{Family::stacked,   Family::wheel,      Family::prism,
                                        Family::antiprism, Family::octahedron, Family::random_circuit};
    return fs;
}

/// One engine call: the op plus its parameters. `sep` only for split,
/// `g_edge` only for cycle3.
struct Case {
    Op op = Op::edge;
    BoundInstance in;
    std::optional<Separation> sep;
    std::optional<Edge> g_edge;
};

inline std::string describe(const Case& c) {
    std::string s = to_string(c.op) + " u=" + std::to_string(c.in.u) + " v=" + std::to_string(c.in.v);
    if (c.in.z) s += " z=" + std::to_string(*c.in.z);
    if (c.in.e) s += " e=" + to_string(*c.in.e);
    if (c.in.f) s += " f=" + to_string(*c.in.f);
    if (c.g_edge) s += " g=" + to_string(*c.g_edge);
    if (c.sep) s += " cut=" + std::to_string(c.sep->cut.first) + "," + std::to_string(c.sep->cut.second);
    return s;
}

/// Every valid parameter tuple of `op` on g, read off the outer cycle so the
/// clockwise preconditions hold by construction.
inline std::vector<Case> all_cases(const PlaneGraph& g, Op op) {
    std::vector<Case> out;
    if (op == Op::cycle3) {
        const auto prof = connectivity_profile(g);
        if (prof.kappa < 3 || !prof.essentially_4) return out;
        for (std::size_t fi = 0; fi < g.num_faces(); ++fi) {
            const auto& w = g.faces()[fi];
            if (w.size() < 3) continue;
            std::vector<Edge> es;
            for (std::size_t i = 0; i < w.size(); ++i) es.push_back(Edge::of(w[i], w[(i + 1) % w.size()]));
            for (std::size_t a = 0; a < es.size(); ++a)
                for (std::size_t b = a + 1; b < es.size(); ++b)
                    for (std::size_t d = b + 1; d < es.size(); ++d) {
                        // faces sharing all three edges only happen for a triangle graph
                        if (!face_with_edges(g, {es[a], es[b], es[d]})) continue;
                        Case c;
                        c.op = op;
                        c.in.e = es[a];
                        c.in.f = es[b];
                        c.g_edge = es[d];
                        out.push_back(c);
                    }
        }
        return out;
    }
    const OuterCycle c = OuterCycle::of(g);
    const auto cv = c.vertices();
    const std::size_t k = cv.size();
    const auto arc_edge = [](const Path& arc, std::size_t i) { return Edge::of(arc[i], arc[i + 1]); };
    std::vector<Separation> seps;
    if (op == Op::split) seps = two_separations(g);
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId u = cv[i];
        if (op == Op::edge || op == Op::vertex) {
            for (std::size_t j = 1; j < k; ++j) {
                const VertexId v = cv[(i + j) % k];
                const Path arc = c.arc(u, v);
                if (op == Op::edge)
                    for (std::size_t a = 0; a + 1 < arc.size(); ++a) out.push_back({op, {u, v, arc_edge(arc, a), {}, {}}, {}, {}});
                else
                    for (VertexId z : cv)
                        if (z != u && z != v) out.push_back({op, {u, v, {}, {}, z}, {}, {}});
            }
            continue;
        }
        // uv on C, running clockwise from v to u
        const VertexId v = cv[(i + k - 1) % k];
        const Path arc = c.arc(u, v);
        for (std::size_t a = 0; a + 1 < arc.size(); ++a)
            for (std::size_t b = a; b + 1 < arc.size(); ++b) {
                const Edge e = arc_edge(arc, b);
                if (op == Op::vertex_edge) {
                    if (a >= 1) out.push_back({op, {u, v, e, {}, arc[a]}, {}, {}});
                    continue;
                }
                if (b == a) continue;
                const Edge f = arc_edge(arc, a);
                if (op == Op::two_edge) {
                    out.push_back({op, {u, v, e, f, {}}, {}, {}});
                    continue;
                }
                for (Separation s : seps) {
                    if (!(s.side_a.count(u) && s.side_a.count(v))) std::swap(s.side_a, s.side_b);
                    if (!(s.side_a.count(u) && s.side_a.count(v))) continue;
                    if (std::set<VertexId>{s.cut.first, s.cut.second} == std::set<VertexId>{u, v}) continue;
                    if (!s.edge_in_b(e) || s.side_b.size() < 3) continue;
                    out.push_back({op, {u, v, e, f, {}}, s, {}});
                }
            }
    }
    return out;
}

inline TutteResult run_case(const PlaneGraph& g, const Case& c, const EngineOptions& o) {
    switch (c.op) {
        case Op::edge: return tutte_path_edge_refined(g, c.in.u, c.in.v, *c.in.e, o);
        case Op::vertex: return tutte_path_vertex(g, c.in.u, c.in.v, *c.in.z, o);
        case Op::two_edge: return tutte_path_two_edges(g, c.in.u, c.in.v, *c.in.e, *c.in.f, o);
        case Op::split: return split_two_edge_on_separation(g, c.in.u, c.in.v, *c.in.e, *c.in.f, *c.sep, o);
        case Op::vertex_edge: return tutte_path_vertex_edge(g, c.in.u, c.in.v, *c.in.z, *c.in.e, o);
        case Op::cycle3: return long_cycle_three_edges(g, *c.in.e, *c.in.f, *c.g_edge, o);
    }
    throw PreconditionError("unknown op");
}

struct StressOptions {
    int nmax = 9;
    int count = 50;  ///< instances per family
    std::uint64_t seed = 1;
    std::vector<Family> families = all_families();
    std::vector<Op> ops = all_ops();
    Mutation mutation = Mutation::none;
    std::size_t tuples = 8;  ///< cases per op and instance; 0 runs every tuple
    std::size_t oracle_cap = oracle::default_cap;  ///< enumeration only up to this n
    std::optional<std::filesystem::path> failure_dir;
};

struct StressFailure {
    std::string instance_id;
    std::string case_text;
    std::string message;
    std::string graph;
};

struct OpStats {
    long cases = 0;
    long violations = 0;
    long enumerated = 0;  ///< cases also checked against full enumeration
};

struct StressSummary {
    long instances = 0;
    long cases = 0;
    long violations = 0;
    long enumerated = 0;
    long enumeration_skipped = 0;
    std::map<std::string, OpStats> ops;
    std::map<std::string, long> instances_per_family;
    std::vector<StressFailure> failures;  ///< first few only
    std::vector<std::string> files;
    double seconds = 0;
};

namespace detail {

inline std::vector<int> sizes_for(Family f, int nmax) {
    std::vector<int> out;
    switch (f) {
        case Family::stacked:
        case Family::random_circuit:
            for (int n = 4; n <= nmax; ++n) out.push_back(n);
            break;
        case Family::wheel:
            for (int n = 4; n <= nmax; ++n) out.push_back(n);
            break;
        case Family::prism:
        case Family::antiprism:
            for (int n = 6; n <= nmax; n += 2) out.push_back(n);
            break;
        case Family::octahedron:
            if (nmax >= 6) out.push_back(6);
            break;
    }
    return out;
}

/// First `keep` items of a seeded Fisher-Yates shuffle (rng() % bound keeps
/// runs identical across standard libraries).
template <typename T>
std::vector<T> sample(std::vector<T> xs, std::size_t keep, std::mt19937_64& rng) {
    if (keep == 0 || xs.size() <= keep) return xs;
    for (std::size_t i = 0; i < keep; ++i) std::swap(xs[i], xs[i + rng() % (xs.size() - i)]);
    xs.resize(keep);
    return xs;
}

/// Checks one engine result; returns the reason it is a violation, or empty.
inline std::string judge(const PlaneGraph& g, const Case& c, const TutteResult& r, bool enumerate, std::size_t cap) {
    std::optional<PlaneGraph> rotated;
    if (c.op == Op::cycle3) {
        const auto face = face_with_edges(g, {*c.in.e, *c.in.f, *c.g_edge});
        rotated = with_outer_face(g, *face);
        const auto cr = oracle::verify_cycle("", g, {*c.in.e, *c.in.f, *c.g_edge}, r.path, enumerate, cap);
        if (!cr.engine_cycle_valid) return "cycle: " + cr.defect;
        if (!r.cycle) return "cycle check missing";
        if (!r.cycle->degenerate && !r.cycle->holds) return "cycle shorter than the bound";
    }
    const PlaneGraph* host = rotated ? &*rotated : &g;
    // measures, without any mutation
    BoundReport clean;
    try {
        clean = bound_report(*host, r.kind, r.instance, r.path);
    } catch (const Error& ex) {
        return std::string("measures rejects the path: ") + ex.what();
    }
    if (!is_c_tutte(*host, Subgraph::of_path(r.path))) return "measures: not C-Tutte";
    if (!clean.satisfied) return "measures: bound violated";
    const auto rep = oracle::verify_instance("", *host, r.kind, r.instance, r.path, r.report,
                                             enumerate && c.op != Op::cycle3, cap);
    if (!rep.engine_path_valid) return "oracle: " + rep.defect;
    if (!rep.engine_bound_satisfied) return "oracle: bound violated";
    if (!rep.report_agrees) return "oracle: engine report differs from recomputation";
    if (rep.min_bridge_count && *rep.min_bridge_count > rep.verdict.bridges) return "oracle: minimum above engine count";
    return {};
}

}  // namespace detail

/// Runs every selected op on seeded instances of each family and checks each
/// answer with measures (always) and the oracle (enumeration when n <= cap).
inline StressSummary stress(const StressOptions& opt, const std::function<void(const std::string&)>& progress = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    StressSummary sum;
    EngineOptions eo;
    eo.mutation = opt.mutation;
    if (opt.failure_dir) std::filesystem::create_directories(*opt.failure_dir);
    for (Family fam : opt.families) {
        const auto sizes = detail::sizes_for(fam, opt.nmax);
        if (sizes.empty()) continue;
        std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(fam));
        for (int i = 0; i < opt.count; ++i) {
            const GeneratorSpec spec{fam, sizes[rng() % sizes.size()], opt.seed * 100000ULL + static_cast<std::uint64_t>(i)};
            const PlaneGraph g = generate(spec);
            const std::string id = to_string(fam) + "-n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed);
            ++sum.instances;
            ++sum.instances_per_family[to_string(fam)];
            const bool enumerate = g.num_vertices() <= opt.oracle_cap;
            bool failed = false;
            for (Op op : opt.ops) {
                auto& st = sum.ops[to_string(op)];
                for (const Case& c : detail::sample(all_cases(g, op), opt.tuples, rng)) {
                    ++st.cases;
                    ++sum.cases;
                    std::string why;
                    try {
                        why = detail::judge(g, c, run_case(g, c, eo), enumerate, opt.oracle_cap);
                    } catch (const ContractError& ex) {
                        why = std::string("engine contract: ") + ex.what();
                    } catch (const ProviderExhausted& ex) {
                        why = std::string("provider: ") + ex.what();
                    } catch (const std::exception& ex) {
                        why = std::string("error: ") + ex.what();
                    }
                    if (enumerate) {
                        ++st.enumerated;
                        ++sum.enumerated;
                    } else {
                        ++sum.enumeration_skipped;
                    }
                    if (why.empty()) continue;
                    ++st.violations;
                    ++sum.violations;
                    failed = true;
                    if (sum.failures.size() < 20) sum.failures.push_back({id, describe(c), why, serialize(g)});
                    if (progress) progress(id + " " + describe(c) + ": " + why);
                }
            }
            if (failed && opt.failure_dir) {
                const auto file = *opt.failure_dir / (id + ".graph");
                std::ofstream(file) << "# failing stress instance " << id << "\n" << serialize(g);
                sum.files.push_back(file.string());
            }
        }
    }
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

}  // namespace tutte

#endif  // TUTTE_STRESS_HPP
