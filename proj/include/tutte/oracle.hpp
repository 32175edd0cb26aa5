#ifndef TUTTE_ORACLE_HPP
#define TUTTE_ORACLE_HPP

// Brute-force ground truth. Shares only the PlaneGraph data structure and its
// face walk with the rest of the library; bridges, goodness, tau and beta are
// recomputed here from the definitions.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tutte/engine.hpp"
#include "tutte/measures.hpp"
#include "tutte/plane_graph.hpp"

namespace tutte::oracle {

inline constexpr std::size_t default_cap = 12;

class CapExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

namespace detail {

using Adj = std::map<VertexId, std::set<VertexId>>;

inline Adj adjacency(const PlaneGraph& g) {
    Adj a;
    for (const auto& [v, r] : g.rotations()) a[v].insert(r.begin(), r.end());
    return a;
}

/// Outer cycle as a clockwise vertex list plus its edge set.
struct Outer {
    std::vector<VertexId> cyc;
    std::set<std::pair<VertexId, VertexId>> edges;  // unordered, stored (min, max)

    explicit Outer(const PlaneGraph& g) : cyc(g.outer_walk()) {
        for (std::size_t i = 0; i < cyc.size(); ++i) edges.insert(key(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
    static std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }
    std::size_t idx(VertexId v) const { return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin()); }
    bool on(VertexId v) const { return idx(v) < cyc.size(); }
    /// Clockwise successor relation: a -> b along the cycle.
    bool step(VertexId a, VertexId b) const { return on(a) && cyc[(idx(a) + 1) % cyc.size()] == b; }
    std::vector<VertexId> walk(VertexId from, VertexId to) const {
        std::vector<VertexId> out{from};
        for (std::size_t i = idx(from); cyc[i] != to;) {
            i = (i + 1) % cyc.size();
            out.push_back(cyc[i]);
        }
        return out;
    }
};

/// Components of the graph with `gone` deleted, by repeated flood fill.
inline std::vector<std::set<VertexId>> pieces(const Adj& a, const std::set<VertexId>& gone) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen(gone);
    for (const auto& [s, _] : a) {
        if (seen.count(s)) continue;
        std::set<VertexId> comp{s};
        std::vector<VertexId> todo{s};
        seen.insert(s);
        while (!todo.empty()) {
            const VertexId x = todo.back();
            todo.pop_back();
            for (VertexId y : a.at(x))
                if (!seen.count(y)) {
                    seen.insert(y);
                    comp.insert(y);
                    todo.push_back(y);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

struct Piece {
    std::set<VertexId> inner;  // empty for a single-edge bridge
    std::set<VertexId> feet;
    bool has_c_edge = false;
};

/// Bridges of the path P (vertex sequence) in G.
inline std::vector<Piece> path_bridges(const Adj& a, const Outer& c, const Path& p) {
    const std::set<VertexId> on_p(p.begin(), p.end());
    std::set<std::pair<VertexId, VertexId>> p_edges;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) p_edges.insert(Outer::key(p[i], p[i + 1]));
    std::vector<Piece> out;
    for (auto& comp : pieces(a, on_p)) {
        Piece b;
        for (VertexId x : comp)
            for (VertexId y : a.at(x)) {
                if (on_p.count(y)) b.feet.insert(y);
                if (c.edges.count(Outer::key(x, y))) b.has_c_edge = true;
            }
        b.inner = std::move(comp);
        out.push_back(std::move(b));
    }
    for (const auto& [x, ys] : a)
        for (VertexId y : ys)
            if (x < y && on_p.count(x) && on_p.count(y) && !p_edges.count({x, y})) {
                Piece b;
                b.feet = {x, y};
                b.has_c_edge = c.edges.count({x, y}) != 0;
                out.push_back(std::move(b));
            }
    return out;
}

inline bool c_tutte(const std::vector<Piece>& bs) {
    for (const auto& b : bs) {
        if (b.feet.size() > 3) return false;
        if (b.has_c_edge && b.feet.size() > 2) return false;
    }
    return true;
}

/// Endpoint of a segment: vertex, or outer edge given as its clockwise (tail, head).
struct End {
    bool is_edge = false;
    VertexId v = 0;
    VertexId tail = 0, head = 0;
};

inline End vertex_end(VertexId v) { return End{false, v, 0, 0}; }

inline End edge_end(const Outer& c, const Edge& e) {
    if (c.step(e.a, e.b)) return End{true, 0, e.a, e.b};
    if (c.step(e.b, e.a)) return End{true, 0, e.b, e.a};
    throw PreconditionError("oracle: edge " + to_string(e) + " is not on the outer cycle");
}

/// xCy: the clockwise subpath from x to y leaving out the edges x and y themselves.
inline std::vector<VertexId> segment(const Outer& c, const End& x, const End& y) {
    return c.walk(x.is_edge ? x.head : x.v, y.is_edge ? y.tail : y.v);
}

/// Goodness straight from the definition. For a pair s, t the edges of G
/// fall into classes: one per component K of G - {s, t} (the edges meeting
/// K) and the edge st if present. A 2-separation with cut {s, t} puts a
/// nonempty proper union of classes into G2; sCt inside G2 forces the classes
/// holding its edges and inner vertices.
inline bool good(const Adj& a, const Outer& c, const std::vector<VertexId>& seg) {
    for (std::size_t i = 0; i < seg.size(); ++i)
        for (std::size_t j = i + 1; j < seg.size(); ++j) {
            const VertexId s = seg[i], t = seg[j];
            const auto comps = pieces(a, {s, t});
            const bool st_edge = a.at(s).count(t) != 0;
            // class ids: components 0..k-1, the edge st is k
            const std::size_t k = comps.size();
            const std::size_t classes = k + (st_edge ? 1 : 0);
            std::set<std::size_t> forced;
            for (std::size_t q = i; q < j; ++q) {
                const VertexId x = seg[q], y = seg[q + 1];
                if (Outer::key(x, y) == Outer::key(s, t)) {
                    forced.insert(k);
                    continue;
                }
                const VertexId inner = (x == s || x == t) ? y : x;
                for (std::size_t r = 0; r < k; ++r)
                    if (comps[r].count(inner)) forced.insert(r);
            }
            for (std::size_t q = i + 1; q < j; ++q)
                for (std::size_t r = 0; r < k; ++r)
                    if (comps[r].count(seg[q])) forced.insert(r);
            if (forced.size() >= classes) continue;  // G1 would be empty
            // biggest admissible G2: everything except one class outside `forced`
            for (std::size_t left = 0; left < classes; ++left) {
                if (forced.count(left)) continue;
                std::size_t verts = 2;
                for (std::size_t r = 0; r < k; ++r)
                    if (r != left) verts += comps[r].size();
                if (verts >= 3) return false;
            }
        }
    (void)c;
    return true;
}

inline long tau3(const Adj& a, const Outer& c, const End& x, const End& y) {
    const auto seg = segment(c, x, y);
    if (!good(a, c, seg)) return 2;
    if (x.is_edge || y.is_edge) {
        bool inc = false;
        if (x.is_edge && y.is_edge)
            inc = !(x.tail == y.tail && x.head == y.head) &&
                  (x.tail == y.tail || x.tail == y.head || x.head == y.tail || x.head == y.head);
        else if (x.is_edge)
            inc = y.v == x.tail || y.v == x.head;
        else
            inc = x.v == y.tail || x.v == y.head;
        if (inc) return 2;
        if (seg.size() == 2) return 1;
    }
    return 0;
}

}  // namespace detail

/// Independent evaluation of a path for one bound kind.
struct Verdict {
    bool valid = false;
    std::string defect;
    long bridges = 0;
    long beta_thirds = 0;
    std::vector<long> tau_thirds;
    long budget_thirds = 0;
    bool bound_satisfied = false;
};

inline Verdict evaluate(const PlaneGraph& g, BoundKind kind, const BoundInstance& in, const Path& p) {
    using namespace detail;
    Verdict out;
    const Adj a = adjacency(g);
    const Outer c(g);
    const auto bad = [&](const std::string& why) {
        out.valid = false;
        out.defect = why;
        return out;
    };
    if (p.size() < 2) return bad("path too short");
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!a.count(p[i])) return bad("unknown vertex " + std::to_string(p[i]));
        if (!seen.insert(p[i]).second) return bad("repeated vertex " + std::to_string(p[i]));
        if (i + 1 < p.size() && !a.at(p[i]).count(p[i + 1]))
            return bad("missing edge " + std::to_string(p[i]) + "-" + std::to_string(p[i + 1]));
    }
    if (p.front() != in.u || p.back() != in.v) return bad("wrong endpoints");
    const auto uses = [&](const Edge& e) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (Outer::key(p[i], p[i + 1]) == Outer::key(e.a, e.b)) return true;
        return false;
    };
    if (in.e && !uses(*in.e)) return bad("path misses e");
    if (in.f && !uses(*in.f)) return bad("path misses f");
    if (in.z && !seen.count(*in.z)) return bad("path misses z");
    const auto bs = path_bridges(a, c, p);
    if (!c_tutte(bs)) return bad("not C-Tutte");
    out.valid = true;
    for (const auto& b : bs)
        if (!b.inner.empty()) {
            ++out.bridges;
            if (b.feet.size() == 2) out.beta_thirds += static_cast<long>(b.inner.size() + b.feet.size()) - 3;
        }
    const long n = static_cast<long>(a.size());
    const auto V = [](VertexId v) { return vertex_end(v); };
    const auto E = [&](const Edge& e) { return edge_end(c, e); };
    long base = 0;
    switch (kind) {
        case BoundKind::edge:
            base = n - 6;
            out.tau_thirds = {tau3(a, c, V(in.v), V(in.u)), tau3(a, c, V(in.u), E(*in.e)), tau3(a, c, E(*in.e), V(in.v))};
            break;
        case BoundKind::vertex: {
            base = n - 3;
            const auto uv = c.walk(in.u, in.v);
            const bool z_on_uv = std::find(uv.begin(), uv.end(), *in.z) != uv.end();
            out.tau_thirds = {z_on_uv ? tau3(a, c, V(in.v), V(in.u)) : tau3(a, c, V(in.u), V(in.v))};
            break;
        }
        case BoundKind::two_edge:
            base = n - 7;
            out.tau_thirds = {tau3(a, c, V(in.u), E(*in.f)), tau3(a, c, E(*in.f), E(*in.e)), tau3(a, c, E(*in.e), V(in.v))};
            break;
        case BoundKind::vertex_edge:
            base = n - 2;
            break;
    }
    out.budget_thirds = base - out.beta_thirds;
    for (long t : out.tau_thirds) out.budget_thirds += t;
    out.bound_satisfied = 3 * out.bridges <= out.budget_thirds;
    return out;
}

/// Calls `visit` for every C-Tutte u-v path holding the required edges and
/// vertices, in lexicographic DFS order. `visit` returns false to stop.
inline void for_each_tutte_path(const PlaneGraph& g, VertexId u, VertexId v, const std::vector<Edge>& must_edges,
                                const std::vector<VertexId>& must_vertices, const std::function<bool(const Path&)>& visit,
                                std::size_t cap = default_cap) {
    using namespace detail;
    if (g.num_vertices() > cap)
        throw CapExceeded("oracle enumeration capped at " + std::to_string(cap) + " vertices");
    const Adj a = adjacency(g);
    const Outer c(g);
    if (!a.count(u) || !a.count(v) || u == v) throw PreconditionError("oracle: bad endpoints");
    Path p{u};
    std::set<VertexId> on{u};
    bool stop = false;
    std::function<void()> dfs = [&] {
        if (stop) return;
        const VertexId w = p.back();
        if (w == v) {
            for (VertexId z : must_vertices)
                if (!on.count(z)) return;
            for (const Edge& e : must_edges) {
                bool found = false;
                for (std::size_t i = 0; i + 1 < p.size() && !found; ++i)
                    found = Outer::key(p[i], p[i + 1]) == Outer::key(e.a, e.b);
                if (!found) return;
            }
            if (c_tutte(path_bridges(a, c, p)) && !visit(p)) stop = true;
            return;
        }
        for (VertexId x : a.at(w)) {
            if (on.count(x)) continue;
            p.push_back(x);
            on.insert(x);
            dfs();
            on.erase(x);
            p.pop_back();
            if (stop) return;
        }
    };
    dfs();
}

inline std::vector<Path> enumerate_tutte_paths(const PlaneGraph& g, VertexId u, VertexId v,
                                               const std::vector<Edge>& must_edges,
                                               const std::vector<VertexId>& must_vertices,
                                               std::size_t cap = default_cap) {
    std::vector<Path> out;
    for_each_tutte_path(
        g, u, v, must_edges, must_vertices,
        [&](const Path& p) {
            out.push_back(p);
            return true;
        },
        cap);
    return out;
}

/// Second count of the same set, organised by vertex set: being C-Tutte
/// depends only on V(P), so count Hamiltonian u-v paths (with the required
/// edges) of G[S] for every C-Tutte vertex set S. Bitmask DP, n <= 16.
inline long count_tutte_paths_by_subsets(const PlaneGraph& g, VertexId u, VertexId v, const std::vector<Edge>& must_edges,
                                         const std::vector<VertexId>& must_vertices) {
    using namespace detail;
    const Adj a = adjacency(g);
    const Outer c(g);
    std::vector<VertexId> ids;
    for (const auto& [x, _] : a) ids.push_back(x);
    const std::size_t n = ids.size();
    if (n > 16) throw CapExceeded("subset count capped at 16 vertices");
    std::map<VertexId, std::size_t> at;
    for (std::size_t i = 0; i < n; ++i) at[ids[i]] = i;
    const std::size_t me = must_edges.size();
    const auto must_index = [&](std::size_t i, std::size_t j) -> int {
        for (std::size_t q = 0; q < me; ++q)
            if (Outer::key(ids[i], ids[j]) == Outer::key(must_edges[q].a, must_edges[q].b)) return static_cast<int>(q);
        return -1;
    };
    long total = 0;
    const std::size_t su = at.at(u), sv = at.at(v);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (!(mask >> su & 1UL) || !(mask >> sv & 1UL)) continue;
        bool ok = true;
        for (VertexId z : must_vertices) ok = ok && (mask >> at.at(z) & 1UL);
        if (!ok) continue;
        // C-Tutte is a property of the vertex set; test it on any ordering-free witness
        std::set<VertexId> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1UL) vs.insert(ids[i]);
        bool tutte = true;
        for (const auto& comp : pieces(a, vs)) {
            std::set<VertexId> feet;
            bool has_c = false;
            for (VertexId x : comp)
                for (VertexId y : a.at(x)) {
                    if (vs.count(y)) feet.insert(y);
                    if (c.edges.count(Outer::key(x, y))) has_c = true;
                }
            if (feet.size() > 3 || (has_c && feet.size() > 2)) tutte = false;
        }
        if (!tutte) continue;
        // ways[sub][last][used must edges]
        const std::size_t uses = 1UL << me;
        std::map<std::tuple<unsigned long, std::size_t, std::size_t>, long> ways;
        ways[{1UL << su, su, 0}] = 1;
        for (unsigned long sub = 0; sub <= mask; ++sub) {
            if ((sub & mask) != sub || !(sub >> su & 1UL)) continue;
            for (std::size_t last = 0; last < n; ++last) {
                if (!(sub >> last & 1UL) || (last == sv && sub != mask)) continue;
                for (std::size_t used = 0; used < uses; ++used) {
                    const auto it = ways.find({sub, last, used});
                    if (it == ways.end()) continue;
                    for (VertexId y : a.at(ids[last])) {
                        const std::size_t j = at.at(y);
                        if (!(mask >> j & 1UL) || (sub >> j & 1UL)) continue;
                        const int q = must_index(last, j);
                        const std::size_t nu = q < 0 ? used : (used | (1UL << q));
                        ways[{sub | (1UL << j), j, nu}] += it->second;
                    }
                }
            }
        }
        const auto it = ways.find({mask, sv, uses - 1});
        if (it != ways.end() && (mask != (1UL << su) || su == sv)) total += it->second;
    }
    return total;
}

struct OracleReport {
    std::string instance_id;
    std::optional<long> valid_paths;       ///< empty when enumeration was skipped
    std::optional<long> min_bridge_count;  ///< over all valid paths
    bool engine_path_valid = false;
    bool engine_bound_satisfied = false;
    /// The engine's b, beta, tau terms and budget equal the oracle's.
    bool report_agrees = false;
    std::optional<Path> witness;  ///< a valid path with the fewest bridges
    std::string defect;
    Verdict verdict;

    bool violation() const {
        if (!engine_path_valid || !engine_bound_satisfied || !report_agrees) return true;
        return min_bridge_count && verdict.bridges < *min_bridge_count;
    }
};

inline std::vector<Edge> must_edges_of(const BoundInstance& in) {
    std::vector<Edge> out;
    if (in.e) out.push_back(*in.e);
    if (in.f) out.push_back(*in.f);
    return out;
}

/// Recomputes validity and the bound of the engine's answer; with
/// `enumerate`, also the minimum bridge count over every valid path (capped).
inline OracleReport verify_instance(const std::string& id, const PlaneGraph& g, BoundKind kind, const BoundInstance& in,
                                    const Path& path, const BoundReport& engine_report, bool enumerate = true,
                                    std::size_t cap = default_cap) {
    OracleReport r;
    r.instance_id = id;
    r.verdict = evaluate(g, kind, in, path);
    r.engine_path_valid = r.verdict.valid;
    r.defect = r.verdict.defect;
    r.engine_bound_satisfied = r.verdict.valid && r.verdict.bound_satisfied;
    if (r.verdict.valid) {
        std::vector<long> engine_tau;
        for (Thirds t : engine_report.tau_terms) engine_tau.push_back(t.value());
        r.report_agrees = engine_report.bridge_count == r.verdict.bridges &&
                          engine_report.beta.value() == r.verdict.beta_thirds && engine_tau == r.verdict.tau_thirds &&
                          engine_report.budget.value() == r.verdict.budget_thirds &&
                          engine_report.satisfied == r.verdict.bound_satisfied;
        if (!r.report_agrees) r.defect = "engine report differs from recomputation";
    }
    if (enumerate) {
        std::vector<VertexId> must_v;
        if (in.z) must_v.push_back(*in.z);
        long count = 0;
        for_each_tutte_path(
            g, in.u, in.v, must_edges_of(in), must_v,
            [&](const Path& p) {
                ++count;
                const long b = evaluate(g, kind, in, p).bridges;
                if (!r.min_bridge_count || b < *r.min_bridge_count) {
                    r.min_bridge_count = b;
                    r.witness = p;
                }
                return true;
            },
            cap);
        r.valid_paths = count;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cycles through prescribed edges

/// Every cycle of G through all of `must`, each once, as a vertex list
/// starting at its smallest vertex with the smaller neighbour second.
inline std::vector<Path> enumerate_cycles(const PlaneGraph& g, const std::vector<Edge>& must,
                                          std::size_t cap = default_cap) {
    using namespace detail;
    if (g.num_vertices() > cap)
        throw CapExceeded("oracle enumeration capped at " + std::to_string(cap) + " vertices");
    const Adj a = adjacency(g);
    std::vector<Path> out;
    for (const auto& [s, _] : a) {
        Path p{s};
        std::set<VertexId> on{s};
        std::function<void()> dfs = [&] {
            const VertexId w = p.back();
            for (VertexId x : a.at(w)) {
                if (x == s && p.size() >= 3 && p[1] < p.back()) {
                    bool all = true;
                    for (const Edge& e : must) {
                        bool found = Outer::key(e.a, e.b) == Outer::key(p.back(), s);
                        for (std::size_t i = 0; i + 1 < p.size() && !found; ++i)
                            found = Outer::key(p[i], p[i + 1]) == Outer::key(e.a, e.b);
                        all = all && found;
                    }
                    if (all) out.push_back(p);
                }
                if (x <= s || on.count(x)) continue;
                p.push_back(x);
                on.insert(x);
                dfs();
                on.erase(x);
                p.pop_back();
            }
        };
        dfs();
    }
    return out;
}

struct CycleReport {
    std::string instance_id;
    bool engine_cycle_valid = false;
    std::string defect;
    long engine_length = 0;
    std::optional<long> cycles;       ///< qualifying cycles, when enumerated
    std::optional<long> max_length;
    std::optional<Path> witness;      ///< a longest qualifying cycle
};

/// Checks that `cycle` is a simple cycle of G through e, f, g and, within the
/// cap, finds the longest such cycle.
inline CycleReport verify_cycle(const std::string& id, const PlaneGraph& g, const std::vector<Edge>& must,
                                const Path& cycle, bool enumerate = true, std::size_t cap = default_cap) {
    using namespace detail;
    CycleReport r;
    r.instance_id = id;
    r.engine_length = static_cast<long>(cycle.size());
    const Adj a = adjacency(g);
    const std::set<VertexId> vs(cycle.begin(), cycle.end());
    std::set<std::pair<VertexId, VertexId>> es;
    if (cycle.size() < 3) r.defect = "cycle too short";
    else if (vs.size() != cycle.size()) r.defect = "repeated vertex";
    for (std::size_t i = 0; i < cycle.size() && r.defect.empty(); ++i) {
        const VertexId x = cycle[i], y = cycle[(i + 1) % cycle.size()];
        if (!a.count(x) || !a.at(x).count(y)) r.defect = "missing edge " + std::to_string(x) + "-" + std::to_string(y);
        es.insert(Outer::key(x, y));
    }
    for (const Edge& e : must)
        if (r.defect.empty() && !es.count(Outer::key(e.a, e.b))) r.defect = "cycle misses " + to_string(e);
    r.engine_cycle_valid = r.defect.empty();
    if (enumerate) {
        const auto all = enumerate_cycles(g, must, cap);
        r.cycles = static_cast<long>(all.size());
        for (const auto& c : all)
            if (!r.max_length || static_cast<long>(c.size()) > *r.max_length) {
                r.max_length = static_cast<long>(c.size());
                r.witness = c;
            }
    }
    return r;
}

}  // namespace tutte::oracle

#endif  // TUTTE_ORACLE_HPP
