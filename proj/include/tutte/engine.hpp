#ifndef TUTTE_ENGINE_HPP
#define TUTTE_ENGINE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tutte/connectivity.hpp"
#include "tutte/measures.hpp"
#include "tutte/plane_graph.hpp"
#include "tutte/provider.hpp"

namespace tutte {

/// An internal construction step produced something that breaks its
/// contract. Carries the reduction trace up to the failure.
class ContractError : public Error {
public:
    ContractError(const std::string& what, std::vector<std::string> trace)
        : Error(what), trace_(std::move(trace)) {}
    const std::vector<std::string>& trace() const { return trace_; }

private:
    std::vector<std::string> trace_;
};

struct EngineOptions {
    /// Check C-Tutte and the bound after every construction step and throw
    /// ContractError on a breach. When off, the report still carries the result.
    bool verify = true;
    Mutation mutation = Mutation::none;
    std::shared_ptr<const BasePathProvider> provider;  ///< null: ExhaustiveProvider
};

struct CycleCheck {
    std::size_t length = 0;
    std::size_t required = 0;  ///< ceil((2n + 1) / 3)
    bool degenerate = false;   ///< some nontrivial bridge has more than one interior vertex
    bool holds = false;
};

struct TutteResult {
    Path path;  ///< for cycles the closing edge runs from back() to front()
    BoundKind kind = BoundKind::edge;
    BoundInstance instance;
    BoundReport report;
    std::vector<std::string> trace;
    std::optional<CycleCheck> cycle;
};

namespace detail {

inline std::string path_string(const Path& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    return out.str();
}

inline std::string cut_string(const Separation& s) {
    return "{" + std::to_string(s.cut.first) + "," + std::to_string(s.cut.second) + "}";
}

inline HalfEdge outer_half_edge_avoiding(const PlaneGraph& g, const std::set<VertexId>& region) {
    const auto& w = g.outer_walk();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const HalfEdge h{w[i], w[(i + 1) % w.size()]};
        if (!region.count(h.from) && !region.count(h.to)) return h;
    }
    throw PreconditionError("no outer edge outside the region");
}

/// One side of a 2-separation plus the edge between the cut vertices, drawn
/// where the other side was.
inline PlaneGraph side_plus_edge(const PlaneGraph& g, const Separation& s, SepSide keep) {
    const std::set<VertexId> region = keep == SepSide::a ? s.interior_b() : s.interior_a();
    return replace_region(g, region, s.cut.first, s.cut.second, Replacement::edge,
                          outer_half_edge_avoiding(g, region))
        .graph;
}

/// Whether e is an edge of the clockwise arc from `from` to `to`.
inline bool edge_on_arc(const OuterCycle& c, VertexId from, VertexId to, const Edge& e) {
    if (!c.has_edge(e)) return false;
    const HalfEdge h = c.orient(e);
    const auto arc = c.arc(from, to);
    for (std::size_t i = 0; i + 1 < arc.size(); ++i)
        if (arc[i] == h.from && arc[i + 1] == h.to) return true;
    return false;
}

/// The cut vertices ordered by their position on the clockwise arc from `from`.
inline std::pair<VertexId, VertexId> cut_in_arc_order(const OuterCycle& c, VertexId from, const Separation& s) {
    auto [x, y] = s.cut;
    const std::size_t k = c.size();
    const auto dist = [&](VertexId w) { return (c.position(w) + k - c.position(from)) % k; };
    if (dist(y) < dist(x)) std::swap(x, y);
    return {x, y};
}

/// Cut vertices (x, y) such that the clockwise arc from x to y runs through side B.
inline std::pair<VertexId, VertexId> cut_around_side_b(const OuterCycle& c, const Separation& s) {
    auto [x, y] = s.cut;
    const auto arc = c.arc(x, y);
    const auto inner = s.interior_b();
    if (arc.size() < 3 || !inner.count(arc[1])) std::swap(x, y);
    return {x, y};
}

inline Path oriented_from(Path p, VertexId start) {
    if (p.empty()) return p;
    if (p.front() != start) std::reverse(p.begin(), p.end());
    return p;
}

/// Replaces the consecutive pair x, y of `p` by `sub`, a path between x and y.
inline Path splice_at_edge(const Path& p, VertexId x, VertexId y, const Path& sub) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!((p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x))) continue;
        const Path piece = oriented_from(sub, p[i]);
        if (piece.front() != p[i] || piece.back() != p[i + 1]) throw Error("splice: subpath endpoints do not match");
        Path out(p.begin(), p.begin() + static_cast<long>(i));
        out.insert(out.end(), piece.begin(), piece.end());
        out.insert(out.end(), p.begin() + static_cast<long>(i) + 2, p.end());
        return out;
    }
    throw Error("splice: edge " + to_string(Edge::of(x, y)) + " not on path");
}

/// Replaces the inner vertex t of `p` by `sub`, a path between its two path neighbours.
inline Path splice_at_vertex(const Path& p, VertexId t, const Path& sub) {
    const auto it = std::find(p.begin(), p.end(), t);
    if (it == p.end() || it == p.begin() || std::next(it) == p.end())
        throw Error("splice: vertex " + std::to_string(t) + " is not an inner path vertex");
    const std::size_t i = static_cast<std::size_t>(it - p.begin());
    const Path piece = oriented_from(sub, p[i - 1]);
    if (piece.front() != p[i - 1] || piece.back() != p[i + 1]) throw Error("splice: subpath endpoints do not match");
    Path out(p.begin(), p.begin() + static_cast<long>(i) - 1);
    out.insert(out.end(), piece.begin(), piece.end());
    out.insert(out.end(), p.begin() + static_cast<long>(i) + 2, p.end());
    return out;
}

inline const Separation* largest_side_b(const std::vector<Separation>& seps) {
    const Separation* best = nullptr;
    for (const auto& s : seps)
        if (!best || s.side_b.size() > best->side_b.size()) best = &s;
    return best;
}

inline bool contains(const Path& p, VertexId v) { return std::find(p.begin(), p.end(), v) != p.end(); }

}  // namespace detail

/// The recursive constructions. One instance per top-level call; it owns the
/// trace and the options.
class Engine {
public:
    explicit Engine(EngineOptions o) : opts_(std::move(o)) {
        if (!opts_.provider) opts_.provider = std::make_shared<ExhaustiveProvider>();
    }

    const std::vector<std::string>& trace() const { return trace_; }
    Mutation mutation() const { return opts_.mutation; }

    /// Single-edge path straight from the provider.
    Path base(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e) {
        note("base path " + std::to_string(u) + "-" + std::to_string(v) + " through " + to_string(e) + " (n=" +
             std::to_string(g.num_vertices()) + ")");
        Path p;
        try {
            p = opts_.provider->find(g, u, v, e, opts_.mutation);
        } catch (const ProviderExhausted& ex) {
            fail(ex.what());
        }
        check(g, BoundKind::edge, {u, v, e, {}, {}}, p);
        return p;
    }

    /// Single-edge path with the beta-refined bound: contract the maximal
    /// 2-separations away from u, v, e, solve the contracted graph, expand.
    Path edge(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e) {
        Depth d(*this);
        note("edge path " + std::to_string(u) + "-" + std::to_string(v) + " through " + to_string(e) + " (n=" +
             std::to_string(g.num_vertices()) + ")");
        const OuterCycle c = OuterCycle::of(g);
        if (!detail::edge_on_arc(c, u, v, e)) fail("edge " + to_string(e) + " is not on the arc from u to v");

        std::vector<Separation> cands;
        for (auto& s : two_separations(g, SeparationFilter{{u, v}, {e}}))
            if (s.interior_b().size() >= 2) cands.push_back(std::move(s));
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Separation& a, const Separation& b) { return a.side_b.size() > b.side_b.size(); });
        std::vector<Separation> chosen;
        std::set<VertexId> taken;
        for (const auto& s : cands) {
            const auto inner = s.interior_b();
            const bool clash = std::any_of(s.side_b.begin(), s.side_b.end(), [&](VertexId w) { return taken.count(w) != 0; });
            if (clash) continue;
            taken.insert(inner.begin(), inner.end());
            chosen.push_back(s);
        }

        PlaneGraph h = g;
        std::set<VertexId> reserved;
        for (VertexId w : g.vertices()) reserved.insert(w);
        std::vector<std::pair<VertexId, Separation>> apexes;
        for (const auto& s : chosen) {
            auto r = contract_side(h, s, SepSide::b, SeparationFilter{{u, v}, {e}}, reserved);
            reserved.insert(r.apex);
            note("contract side of cut " + detail::cut_string(s) + " (" + std::to_string(s.interior_b().size()) +
                 " vertices) to " + std::to_string(r.apex));
            h = std::move(r.graph);
            apexes.emplace_back(r.apex, s);
        }

        Path p = base(h, u, v, e);
        for (const auto& [t, s] : apexes) {
            if (!detail::contains(p, t)) continue;
            const auto [x, y] = detail::cut_around_side_b(c, s);
            const PlaneGraph bt = detail::side_plus_edge(g, s, SepSide::b);
            const OuterCycle ct = OuterCycle::of(bt);
            const auto arc = ct.arc(x, y);
            std::optional<Edge> ep;
            for (std::size_t i = 0; i + 1 < arc.size() && !ep; ++i) {
                const Edge cand = Edge::of(arc[i], arc[i + 1]);
                if (tau(bt, ct, {x, cand}, opts_.mutation).value() <= 1) ep = cand;
            }
            if (!ep) fail("no edge e' with tau(x e') <= 1/3 on the arc " + std::to_string(x) + "-" + std::to_string(y));
            note("expand " + std::to_string(t) + " through " + to_string(*ep));
            const Path pt = edge(bt, x, y, *ep);
            p = splice(p, t, pt);
        }
        check(g, BoundKind::edge, {u, v, e, {}, {}}, p);
        return p;
    }

    /// Path between u and v through the outer vertex z.
    Path vertex(const PlaneGraph& g, VertexId u, VertexId v, VertexId z) {
        Depth d(*this);
        const OuterCycle c = OuterCycle::of(g);
        if (!on_clockwise_arc(c, u, v, z)) {
            note("vertex path: z lies on the arc from v to u, solving " + std::to_string(v) + "-" + std::to_string(u));
            Path p = vertex(g, v, u, z);
            std::reverse(p.begin(), p.end());
            return p;
        }
        note("vertex path " + std::to_string(u) + "-" + std::to_string(v) + " through " + std::to_string(z) + " (n=" +
             std::to_string(g.num_vertices()) + ")");
        std::vector<Separation> seps;
        for (auto& s : two_separations(g, SeparationFilter{{u, v}, {}}))
            if (s.interior_b().count(z)) seps.push_back(std::move(s));
        Path p;
        if (seps.empty()) {
            const auto arc = c.arc(u, v);
            std::optional<Edge> e;
            for (std::size_t i = 0; i + 1 < arc.size() && !e; ++i) {
                const Edge cand = Edge::of(arc[i], arc[i + 1]);
                if (tau(g, c, {u, cand}, opts_.mutation).value() <= 1 && tau(g, c, {cand, v}, opts_.mutation).value() <= 2)
                    e = cand;
            }
            if (!e) fail("no edge on the arc u-v with tau(ue) <= 1/3 and tau(ev) <= 2/3");
            note("no cut separates z; through " + to_string(*e));
            p = edge(g, u, v, *e);
            if (!detail::contains(p, z)) fail("edge path misses z = " + std::to_string(z));
        } else {
            const Separation& s = *detail::largest_side_b(seps);
            const auto [x, y] = detail::cut_in_arc_order(c, u, s);
            note("split at cut " + detail::cut_string(s) + " around z");
            const Path p1 = edge(detail::side_plus_edge(g, s, SepSide::a), u, v, Edge::of(x, y));
            const Path p2 = vertex(detail::side_plus_edge(g, s, SepSide::b), x, y, z);
            p = splice(p1, x, y, p2);
        }
        check(g, BoundKind::vertex, {u, v, {}, {}, z}, p);
        return p;
    }

    /// Two-edge path through a 2-separation whose far side holds e.
    Path split(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, const Edge& f, const Separation& s) {
        Depth d(*this);
        const OuterCycle c = OuterCycle::of(g);
        const auto [x, y] = detail::cut_in_arc_order(c, u, s);
        const Edge e1 = Edge::of(x, y);
        const PlaneGraph g1 = detail::side_plus_edge(g, s, SepSide::a);
        const PlaneGraph g2 = detail::side_plus_edge(g, s, SepSide::b);
        Path p1, p2;
        if (s.edge_in_b(f)) {
            note("split at cut " + detail::cut_string(s) + ": case 1, f on the far side");
            p1 = edge(g1, u, v, e1);
            p2 = two_edge(g2, x, y, e, f);
        } else {
            note("split at cut " + detail::cut_string(s) + ": case 2, f on the near side");
            p1 = two_edge(g1, u, v, e1, f);
            p2 = edge(g2, x, y, e);
        }
        const Path p = splice(p1, x, y, p2);
        check(g, BoundKind::two_edge, {u, v, e, f, {}}, p);
        return p;
    }

    /// Path between the ends of the outer edge vu through outer edges f and e.
    Path two_edge(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, const Edge& f) {
        Depth d(*this);
        note("two-edge path " + std::to_string(u) + "-" + std::to_string(v) + " through " + to_string(f) + ", " +
             to_string(e) + " (n=" + std::to_string(g.num_vertices()) + ")");
        const OuterCycle c = OuterCycle::of(g);
        if (c.next(v) != u) fail("v u is not an outer edge in clockwise direction");
        const BoundInstance inst{u, v, e, f, {}};

        // reduction (1): a 2-separation keeping u, v, e, f with a large far side
        {
            std::vector<Separation> seps;
            for (auto& s : two_separations(g, SeparationFilter{{u, v}, {e, f}}))
                if (s.side_b.size() > 3) seps.push_back(std::move(s));
            if (!seps.empty()) {
                const Separation& s = *detail::largest_side_b(seps);
                auto r = contract_side(g, s, SepSide::b, SeparationFilter{{u, v}, {e, f}});
                note("reduce: contract side of cut " + detail::cut_string(s) + " to " + std::to_string(r.apex));
                Path p = two_edge(r.graph, u, v, e, f);
                if (detail::contains(p, r.apex)) {
                    const auto [x, y] = detail::cut_around_side_b(c, s);
                    const VertexId z = c.arc(x, y)[1];
                    note("reduce: expand " + std::to_string(r.apex) + " through " + std::to_string(z));
                    const Path p2 = vertex(detail::side_plus_edge(g, s, SepSide::b), x, y, z);
                    p = splice(p, r.apex, p2);
                }
                check(g, BoundKind::two_edge, inst, p);
                return p;
            }
        }

        // base case (2)
        const std::size_t uce = clockwise_segment(c, {u, e}).size();
        const std::size_t fcv = clockwise_segment(c, {f, v}).size();
        if (uce < 3 && fcv < 3) {
            Path p = c.arc(u, v);
            note("base: outer cycle minus uv");
            check(g, BoundKind::two_edge, inst, p);
            return p;
        }
        if (uce < 3) {
            note("mirror: |uCe| < 3");
            Path p = two_edge(mirror(g), v, u, f, e);
            std::reverse(p.begin(), p.end());
            check(g, BoundKind::two_edge, inst, p);
            return p;
        }

        // 2-separations with e on the far side go to the splitter
        {
            std::vector<Separation> seps;
            for (auto& s : two_separations(g, SeparationFilter{{u, v}, {}})) {
                const bool uv_cut = (s.cut.first == u && s.cut.second == v) || (s.cut.first == v && s.cut.second == u);
                if (!uv_cut && s.edge_in_b(e) && s.side_b.size() >= 3) seps.push_back(std::move(s));
            }
            if (!seps.empty()) return split(g, u, v, e, f, *detail::largest_side_b(seps));
        }

        return decompose(g, u, v, e, f);
    }

    /// Path between the ends of the outer edge vu through z and e.
    Path vertex_edge(const PlaneGraph& g, VertexId u, VertexId v, VertexId z, const Edge& e) {
        Depth d(*this);
        note("vertex-edge path " + std::to_string(u) + "-" + std::to_string(v) + " through " + std::to_string(z) +
             ", " + to_string(e) + " (n=" + std::to_string(g.num_vertices()) + ")");
        const OuterCycle c = OuterCycle::of(g);
        const auto uce = c.arc(u, c.orient(e).from);
        const std::set<VertexId> on_uce(uce.begin(), uce.end());
        std::vector<Separation> seps, with_z;
        for (auto& s : two_separations(g, SeparationFilter{{u, v}, {e}})) {
            if (!on_uce.count(s.cut.first) || !on_uce.count(s.cut.second)) continue;
            if (s.interior_b().count(z)) with_z.push_back(s);
            seps.push_back(std::move(s));
        }
        Path p;
        if (seps.empty()) {
            note("no cut inside uCe");
            p = edge(g, u, v, e);
        } else {
            const Separation& s = *detail::largest_side_b(with_z.empty() ? seps : with_z);
            const auto [x, y] = detail::cut_in_arc_order(c, u, s);
            const bool z_far = s.interior_b().count(z) != 0;
            note("split at cut " + detail::cut_string(s) + (z_far ? " with z on the far side" : ""));
            const Path p1 = two_edge(detail::side_plus_edge(g, s, SepSide::a), u, v, e, Edge::of(x, y));
            const VertexId z2 = z_far ? z : c.arc(x, y)[1];
            const Path p2 = vertex(detail::side_plus_edge(g, s, SepSide::b), x, y, z2);
            p = splice(p1, x, y, p2);
        }
        if (!detail::contains(p, z)) fail("path misses z = " + std::to_string(z));
        check(g, BoundKind::vertex_edge, {u, v, e, {}, z}, p);
        return p;
    }

private:
    struct Depth {
        explicit Depth(Engine& e) : eng(e) { ++eng.depth_; }
        ~Depth() { --eng.depth_; }
        Engine& eng;
    };

    void note(const std::string& s) { trace_.push_back(std::string(2 * static_cast<std::size_t>(std::max(depth_, 0)), ' ') + s); }

    [[noreturn]] void fail(const std::string& s) const { throw ContractError(s, trace_); }

    Path splice(const Path& p, VertexId x, VertexId y, const Path& sub) const {
        try {
            return detail::splice_at_edge(p, x, y, sub);
        } catch (const ContractError&) {
            throw;
        } catch (const Error& ex) {
            fail(ex.what());
        }
    }

    Path splice(const Path& p, VertexId t, const Path& sub) const {
        try {
            return detail::splice_at_vertex(p, t, sub);
        } catch (const ContractError&) {
            throw;
        } catch (const Error& ex) {
            fail(ex.what());
        }
    }

    void check(const PlaneGraph& g, BoundKind kind, const BoundInstance& in, const Path& p) const {
        if (!opts_.verify) return;
        BoundReport r;
        try {
            r = bound_report(g, kind, in, p, opts_.mutation);
        } catch (const PreconditionError& ex) {
            fail(to_string(kind) + " result invalid: " + ex.what() + " [" + detail::path_string(p) + "]");
        }
        if (!is_c_tutte(g, Subgraph::of_path(p)))
            fail(to_string(kind) + " result is not C-Tutte [" + detail::path_string(p) + "]");
        if (!r.satisfied)
            fail(to_string(kind) + " bound violated: 3b = " + std::to_string(3 * r.bridge_count) + " > budget " +
                 std::to_string(r.budget.value()) + " [" + detail::path_string(p) + "]");
    }

    struct JPart {
        std::size_t a = 0;  ///< span on v''Cv, by index
        std::size_t b = 0;
        std::set<VertexId> vertices;
        std::set<Edge> edges;
        std::set<VertexId> on_ph;
    };

    /// The block decomposition: P_H in the block H of G - v''Cv, then one
    /// subpath per class of bridges hanging off H, joined along v''Cv.
    Path decompose(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, const Edge& f) {
        const OuterCycle c = OuterCycle::of(g);
        const HalfEdge he = c.orient(e);
        const VertexId v1 = he.from;
        const VertexId v2 = he.to;
        const std::vector<VertexId> s_arc = c.arc(v2, v);
        const std::set<VertexId> s_set(s_arc.begin(), s_arc.end());
        std::map<VertexId, std::size_t> s_pos;
        for (std::size_t i = 0; i < s_arc.size(); ++i) s_pos[s_arc[i]] = i;

        // block H containing uCv'
        const auto bd = blocks(without(g.rotations(), s_set));
        const auto ucv = c.arc(u, v1);
        const Block* hb = nullptr;
        for (const auto& b : bd.blocks) {
            const std::set<Edge> es(b.edges.begin(), b.edges.end());
            bool all = true;
            for (std::size_t i = 0; i + 1 < ucv.size() && all; ++i) all = es.count(Edge::of(ucv[i], ucv[i + 1])) != 0;
            if (all) hb = &b;
        }
        if (!hb) fail("uCv' is not inside one block of G - v''Cv");
        const std::set<Edge> h_edges(hb->edges.begin(), hb->edges.end());
        const PlaneGraph h = restrict_to(g, hb->vertices, h_edges, HalfEdge{u, c.next(u)});
        note("block H: " + std::to_string(h.num_vertices()) + " vertices; P_H from " + std::to_string(u) + " to " +
             std::to_string(v1) + " through " + to_string(f));
        const Path ph = edge(h, u, v1, f);
        const std::set<VertexId> ph_set(ph.begin(), ph.end());

        // bridges of H + v''Cv
        Subgraph x_sub;
        x_sub.vertices = hb->vertices;
        x_sub.vertices.insert(s_set.begin(), s_set.end());
        x_sub.edges = h_edges;
        for (std::size_t i = 0; i + 1 < s_arc.size(); ++i) x_sub.edges.insert(Edge::of(s_arc[i], s_arc[i + 1]));
        const auto all_bridges = bridges_of(g, x_sub);
        std::vector<Bridge> ph_bridges;
        for (auto& b : bridges_of(h, Subgraph::of_path(ph)))
            if (!b.trivial) ph_bridges.push_back(std::move(b));

        std::map<std::pair<int, VertexId>, std::vector<const Bridge*>> classes;
        std::vector<const Bridge*> hanging;  // no attachment in H
        for (const auto& b : all_bridges) {
            std::vector<VertexId> in_h;
            for (VertexId w : b.attachments)
                if (hb->vertices.count(w)) in_h.push_back(w);
            if (in_h.size() > 1) fail("a bridge of H + v''Cv meets H twice");
            if (in_h.empty()) {
                hanging.push_back(&b);
                continue;
            }
            const VertexId w = in_h.front();
            if (ph_set.count(w)) {
                classes[{0, w}].push_back(&b);
                continue;
            }
            int k = -1;
            for (std::size_t i = 0; i < ph_bridges.size(); ++i)
                if (ph_bridges[i].interior.count(w)) k = static_cast<int>(i);
            if (k < 0) fail("vertex " + std::to_string(w) + " of H is neither on P_H nor in a P_H-bridge");
            classes[{1, k}].push_back(&b);
        }

        std::vector<JPart> parts;
        for (const auto& [key, members] : classes) {
            JPart j;
            bool first = true;
            for (const Bridge* b : members)
                for (VertexId w : b->attachments)
                    if (s_set.count(w)) {
                        const std::size_t i = s_pos.at(w);
                        j.a = first ? i : std::min(j.a, i);
                        j.b = first ? i : std::max(j.b, i);
                        first = false;
                    }
            if (first) fail("a class of bridges does not reach v''Cv");
            for (std::size_t i = j.a; i <= j.b; ++i) j.vertices.insert(s_arc[i]);
            for (std::size_t i = j.a; i < j.b; ++i) j.edges.insert(Edge::of(s_arc[i], s_arc[i + 1]));
            auto add = [&](const Bridge& b) {
                j.vertices.insert(b.attachments.begin(), b.attachments.end());
                j.vertices.insert(b.interior.begin(), b.interior.end());
                j.edges.insert(b.edges.begin(), b.edges.end());
            };
            for (const Bridge* b : members) add(*b);
            for (const Bridge* b : hanging) {
                const bool inside = std::all_of(b->attachments.begin(), b->attachments.end(), [&](VertexId w) {
                    return s_set.count(w) && s_pos.at(w) >= j.a && s_pos.at(w) <= j.b;
                });
                if (inside) add(*b);
            }
            if (key.first == 1) add(ph_bridges[static_cast<std::size_t>(key.second)]);
            for (VertexId w : j.vertices)
                if (ph_set.count(w)) j.on_ph.insert(w);
            parts.push_back(std::move(j));
        }
        // the part of e leads; when v'' = v several spans collapse onto v
        std::sort(parts.begin(), parts.end(), [&](const JPart& p, const JPart& q) {
            if (p.a != q.a) return p.a < q.a;
            const bool pe = p.edges.count(e) != 0;
            const bool qe = q.edges.count(e) != 0;
            if (pe != qe) return pe;
            return p.b < q.b;
        });
        if (parts.empty() || parts.front().a != 0 || parts.back().b != s_arc.size() - 1)
            fail("the spans do not start at v'' and end at v");
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i].b > parts[i + 1].a) fail("overlapping spans on v''Cv");
        if (parts.front().vertices != std::set<VertexId>{v1, v2}) fail("the first part is not the edge e");

        const long t_ev = tau(g, c, {e, v}, opts_.mutation).value();
        note("plan: " + std::to_string(parts.size()) + " parts; case " + std::to_string(3 - t_ev) + " (tau(ev) = " +
             std::to_string(t_ev) + "/3)");

        Path p = ph;
        p.push_back(v2);
        bool case3_pick = false;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const JPart& j = parts[i];
            for (std::size_t k = parts[i - 1].b + 1; k <= j.a; ++k) p.push_back(s_arc[k]);
            if (parts[i - 1].b + 1 < j.a) note("L part " + std::to_string(s_arc[parts[i - 1].b]) + ".." + std::to_string(s_arc[j.a]));
            Path pi;
            const VertexId ai = s_arc[j.a];
            const VertexId bi = s_arc[j.b];
            const std::string span = " span " + std::to_string(ai) + ".." + std::to_string(bi);
            if (j.on_ph.size() == 1 && j.a == j.b) {
                note("J part (single attachment, a = b)" + span);
                pi = {ai};
            } else if (j.on_ph.size() == 1) {
                const bool pick = t_ev == 0 && !case3_pick && j.b - j.a >= 2;
                if (pick) case3_pick = true;
                note(std::string("J part (one vertex on P_H, added edge)") + span + (pick ? " [case 3 part]" : ""));
                pi = attach_one(g, j, *j.on_ph.begin(), s_arc);
            } else if (j.on_ph.size() == 2) {
                note("J part (two vertices on P_H)" + span);
                pi = attach_two(g, h, v1, j, s_arc);
            } else {
                fail("a J part meets P_H in " + std::to_string(j.on_ph.size()) + " vertices");
            }
            p.insert(p.end(), pi.begin() + 1, pi.end());
        }
        check(g, BoundKind::two_edge, {u, v, e, f, {}}, p);
        return p;
    }

    /// J part meeting P_H in the single vertex x: add the edge x a_i and take a
    /// single-edge path from x to b_i through it.
    Path attach_one(const PlaneGraph& g, const JPart& j, VertexId x, const std::vector<VertexId>& s_arc) {
        const VertexId ai = s_arc[j.a];
        const VertexId an = s_arc[j.a + 1];
        const VertexId bi = s_arc[j.b];
        const PlaneGraph ji = restrict_to(g, j.vertices, j.edges, HalfEdge{ai, an});
        PlaneGraph jp = ji;
        if (!ji.has_edge(x, ai)) {
            const auto& walk = ji.outer_walk();
            const std::size_t k = walk.size();
            std::optional<std::size_t> pa;
            for (std::size_t i = 0; i < k && !pa; ++i)
                if (walk[i] == ai && walk[(i + 1) % k] == an) pa = i;
            if (!pa) fail("a_i a_i+ is not on the outer walk of J_i");
            std::optional<std::size_t> pb, px;
            for (std::size_t s = 1; s < k && !px; ++s) {
                const std::size_t i = (*pa + s) % k;
                if (!pb && walk[i] == bi) pb = i;
                else if (pb && walk[i] == x) px = i;
            }
            if (!px) fail("x does not follow b_i on the outer walk of J_i");
            const Corner ca{ai, walk[(*pa + k - 1) % k]};
            const Corner cx{x, walk[(*px + k - 1) % k]};
            try {
                jp = add_edge_at_corners(ji, ca, cx, HalfEdge{ai, an});
            } catch (const Error& ex) {
                fail(std::string("cannot add x a_i: ") + ex.what());
            }
        }
        const Path pp = edge(jp, x, bi, Edge::of(x, ai));
        if (pp.size() < 2 || pp[1] != ai) fail("J_i path does not start with x a_i");
        return Path(pp.begin() + 1, pp.end());
    }

    /// J part meeting P_H in x and y: a vertex path in the block of J_i - {x, y}
    /// holding a_iCb_i, through the vertex where the neighbours of y give way
    /// to those of x.
    Path attach_two(const PlaneGraph& g, const PlaneGraph& h, VertexId v1, const JPart& j,
                    const std::vector<VertexId>& s_arc) {
        const VertexId ai = s_arc[j.a];
        const VertexId bi = s_arc[j.b];
        if (j.a == j.b) return {ai};
        const OuterCycle d = OuterCycle::of(h);
        VertexId x = *j.on_ph.begin();
        VertexId y = *std::next(j.on_ph.begin());
        const auto from_v1 = [&](VertexId w) { return (d.position(w) + d.size() - d.position(v1)) % d.size(); };
        if (from_v1(x) < from_v1(y)) std::swap(x, y);

        Adjacency adj;
        for (VertexId w : j.vertices) adj[w];
        for (const Edge& ed : j.edges) {
            adj[ed.a].push_back(ed.b);
            adj[ed.b].push_back(ed.a);
        }
        const auto bd = blocks(without(adj, {x, y}));
        const Block* jb = nullptr;
        for (const auto& b : bd.blocks)
            if (std::find(b.edges.begin(), b.edges.end(), Edge::of(ai, s_arc[j.a + 1])) != b.edges.end()) jb = &b;
        if (!jb) fail("a_i a_i+ lies in no block of J_i - {x, y}");
        for (std::size_t i = j.a; i < j.b; ++i)
            if (std::find(jb->edges.begin(), jb->edges.end(), Edge::of(s_arc[i], s_arc[i + 1])) == jb->edges.end())
                fail("a_iCb_i is not inside one block of J_i - {x, y}");
        if (jb->vertices.size() == 2) return {ai, bi};
        const PlaneGraph jp =
            restrict_to(g, jb->vertices, std::set<Edge>(jb->edges.begin(), jb->edges.end()), HalfEdge{ai, s_arc[j.a + 1]});
        const OuterCycle ci = OuterCycle::of(jp);
        const auto inner = ci.arc(bi, ai);
        std::optional<VertexId> z;
        for (std::size_t k = 1; k + 1 < inner.size() && !z; ++k) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) ok = !g.has_edge(inner[i], y);
            for (std::size_t i = k + 1; i < inner.size() && ok; ++i) ok = !g.has_edge(inner[i], x);
            if (ok) z = inner[k];
        }
        if (!z) fail("no split vertex z on b_iC_ia_i");
        note("  split vertex z = " + std::to_string(*z) + " (x = " + std::to_string(x) + ", y = " + std::to_string(y) + ")");
        return detail::oriented_from(vertex(jp, ai, bi, *z), ai);
    }

    EngineOptions opts_;
    std::vector<std::string> trace_;
    int depth_ = -1;
};

// ---------------------------------------------------------------------------
// Public operations

namespace detail {

inline void require_circuit(const PlaneGraph& g) {
    const auto ck = is_circuit_graph(g);
    if (!ck) throw PreconditionError("not a circuit graph: " + to_string(ck.reason));
}

inline void require_outer_vertex(const OuterCycle& c, VertexId w, const char* name) {
    if (!c.contains(w)) throw PreconditionError(std::string(name) + " = " + std::to_string(w) + " is not on the outer cycle");
}

inline void require_outer_edge(const OuterCycle& c, const Edge& e, const char* name) {
    if (!c.has_edge(e)) throw PreconditionError(std::string("edge ") + name + " = " + to_string(e) + " is not on the outer cycle");
}

inline void require_edge_instance(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e) {
    require_circuit(g);
    const OuterCycle c = OuterCycle::of(g);
    require_outer_vertex(c, u, "u");
    require_outer_vertex(c, v, "v");
    if (u == v) throw PreconditionError("u = v");
    require_outer_edge(c, e, "e");
    if (!edge_on_arc(c, u, v, e)) throw PreconditionError("u, e, v do not occur in clockwise order");
}

inline void require_uv_edge_instance(const PlaneGraph& g, VertexId u, VertexId v) {
    require_circuit(g);
    const OuterCycle c = OuterCycle::of(g);
    require_outer_vertex(c, u, "u");
    require_outer_vertex(c, v, "v");
    if (u == v) throw PreconditionError("u = v");
    if (c.next(v) != u) throw PreconditionError("vu is not an outer edge running clockwise from v to u");
}

template <typename F>
TutteResult run(const EngineOptions& o, const PlaneGraph& g, BoundKind kind, const BoundInstance& in, F&& body) {
    Engine eng(o);
    TutteResult r;
    r.kind = kind;
    r.instance = in;
    r.path = body(eng);
    r.trace = eng.trace();
    r.report = bound_report(g, kind, in, r.path, o.mutation);
    return r;
}

}  // namespace detail

inline TutteResult base_tutte_path(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e,
                                   const EngineOptions& o = {}) {
    detail::require_edge_instance(g, u, v, e);
    return detail::run(o, g, BoundKind::edge, {u, v, e, {}, {}}, [&](Engine& eng) { return eng.base(g, u, v, e); });
}

inline TutteResult tutte_path_edge_refined(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e,
                                           const EngineOptions& o = {}) {
    detail::require_edge_instance(g, u, v, e);
    return detail::run(o, g, BoundKind::edge, {u, v, e, {}, {}}, [&](Engine& eng) { return eng.edge(g, u, v, e); });
}

inline TutteResult tutte_path_vertex(const PlaneGraph& g, VertexId u, VertexId v, VertexId z,
                                     const EngineOptions& o = {}) {
    detail::require_circuit(g);
    const OuterCycle c = OuterCycle::of(g);
    detail::require_outer_vertex(c, u, "u");
    detail::require_outer_vertex(c, v, "v");
    detail::require_outer_vertex(c, z, "z");
    if (u == v || u == z || v == z) throw PreconditionError("u, z, v must be distinct");
    return detail::run(o, g, BoundKind::vertex, {u, v, {}, {}, z}, [&](Engine& eng) { return eng.vertex(g, u, v, z); });
}

namespace detail {

inline void require_two_edge_instance(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, const Edge& f) {
    require_uv_edge_instance(g, u, v);
    const OuterCycle c = OuterCycle::of(g);
    require_outer_edge(c, e, "e");
    require_outer_edge(c, f, "f");
    if (e == f) throw PreconditionError("e = f");
    if (e == Edge::of(u, v) || f == Edge::of(u, v)) throw PreconditionError("e and f must differ from uv");
    const auto arc = c.arc(u, v);
    const auto at = [&](const Edge& x) { return std::find(arc.begin(), arc.end(), c.orient(x).from) - arc.begin(); };
    if (at(f) > at(e)) throw PreconditionError("u, f, e, v do not occur in clockwise order");
}

}  // namespace detail

inline TutteResult split_two_edge_on_separation(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e,
                                                const Edge& f, const Separation& sep, const EngineOptions& o = {}) {
    detail::require_two_edge_instance(g, u, v, e, f);
    Separation s = sep;
    if (!(s.side_a.count(u) && s.side_a.count(v))) std::swap(s.side_a, s.side_b);
    if (!(s.side_a.count(u) && s.side_a.count(v))) throw PreconditionError("u and v are not on one side");
    const auto comps = components_without(g, {s.cut.first, s.cut.second});
    std::set<VertexId> all(s.side_a);
    all.insert(s.side_b.begin(), s.side_b.end());
    if (comps.size() < 2 || all.size() != g.num_vertices() || s.interior_a().empty() || s.interior_b().empty())
        throw PreconditionError("not a 2-separation of G");
    for (const auto& comp : comps) {
        const bool in_a = s.side_a.count(*comp.begin()) != 0;
        for (VertexId w : comp)
            if ((s.side_a.count(w) != 0) != in_a || (s.side_b.count(w) != 0) == in_a)
                throw PreconditionError("sides split a component of G - {x, y}");
    }
    if (std::set<VertexId>{s.cut.first, s.cut.second} == std::set<VertexId>{u, v})
        throw PreconditionError("the cut is {u, v}");
    if (!s.edge_in_b(e)) throw PreconditionError("e is not an edge of the side without u, v");
    if (s.side_b.size() < 3) throw PreconditionError("the side holding e has fewer than 3 vertices");
    return detail::run(o, g, BoundKind::two_edge, {u, v, e, f, {}},
                       [&](Engine& eng) { return eng.split(g, u, v, e, f, s); });
}

inline TutteResult tutte_path_two_edges(const PlaneGraph& g, VertexId u, VertexId v, const Edge& e, const Edge& f,
                                        const EngineOptions& o = {}) {
    detail::require_two_edge_instance(g, u, v, e, f);
    return detail::run(o, g, BoundKind::two_edge, {u, v, e, f, {}},
                       [&](Engine& eng) { return eng.two_edge(g, u, v, e, f); });
}

inline TutteResult tutte_path_vertex_edge(const PlaneGraph& g, VertexId u, VertexId v, VertexId z, const Edge& e,
                                          const EngineOptions& o = {}) {
    detail::require_uv_edge_instance(g, u, v);
    const OuterCycle c = OuterCycle::of(g);
    detail::require_outer_vertex(c, z, "z");
    detail::require_outer_edge(c, e, "e");
    if (z == u || z == v) throw PreconditionError("u, z, v must be distinct");
    if (e == Edge::of(u, v)) throw PreconditionError("e must differ from uv");
    const auto arc = c.arc(u, v);
    const auto zi = std::find(arc.begin(), arc.end(), z) - arc.begin();
    const auto ei = std::find(arc.begin(), arc.end(), c.orient(e).from) - arc.begin();
    if (zi > ei) throw PreconditionError("u, z, e, v do not occur in clockwise order");
    return detail::run(o, g, BoundKind::vertex_edge, {u, v, e, {}, z},
                       [&](Engine& eng) { return eng.vertex_edge(g, u, v, z, e); });
}

/// The same embedding with face `face` as the outer face.
inline PlaneGraph with_outer_face(const PlaneGraph& g, std::size_t face) {
    if (face >= g.num_faces()) throw PreconditionError("unknown face");
    const auto& w = g.faces()[face];
    return PlaneGraph::build(g.rotations(), HalfEdge{w[0], w[1 % w.size()]});
}

/// The face whose boundary holds all the given edges, if exactly one does.
inline std::optional<std::size_t> face_with_edges(const PlaneGraph& g, const std::vector<Edge>& es) {
    std::optional<std::size_t> found;
    for (std::size_t fi = 0; fi < g.num_faces(); ++fi) {
        const auto& w = g.faces()[fi];
        std::set<Edge> on;
        for (std::size_t i = 0; i < w.size(); ++i) on.insert(Edge::of(w[i], w[(i + 1) % w.size()]));
        if (std::all_of(es.begin(), es.end(), [&](const Edge& e) { return on.count(e) != 0; })) {
            if (found) return std::nullopt;
            found = fi;
        }
    }
    return found;
}

/// Cycle through three edges of a facial cycle F. The result's report and
/// instance refer to G re-embedded with F outside; `cycle` carries the
/// length check.
inline TutteResult long_cycle_three_edges(const PlaneGraph& g, const Edge& e, const Edge& f, const Edge& gedge,
                                          const EngineOptions& o = {}, std::optional<std::size_t> face = {}) {
    const auto prof = connectivity_profile(g);
    if (prof.kappa < 3) throw PreconditionError("G is not 3-connected");
    if (!prof.essentially_4) throw PreconditionError("G is not essentially 4-connected");
    if (e == f || e == gedge || f == gedge) throw PreconditionError("e, f, g must be distinct");
    if (!face) face = face_with_edges(g, {e, f, gedge});
    if (!face) throw PreconditionError("no unique face holds e, f and g");
    const PlaneGraph gf = with_outer_face(g, *face);
    if (!gf.outer_is_cycle()) throw PreconditionError("F is not a cycle");
    const OuterCycle c = OuterCycle::of(gf);
    for (const Edge* x : {&e, &f, &gedge})
        if (!c.has_edge(*x)) throw PreconditionError("edge " + to_string(*x) + " is not on F");
    const HalfEdge hg = c.orient(gedge);
    const VertexId v = hg.from;
    const VertexId u = hg.to;
    const auto arc = c.arc(u, v);
    const auto at = [&](const Edge& x) { return std::find(arc.begin(), arc.end(), c.orient(x).from) - arc.begin(); };
    const Edge first = at(e) < at(f) ? e : f;
    const Edge second = at(e) < at(f) ? f : e;
    TutteResult r = detail::run(o, gf, BoundKind::two_edge, {u, v, second, first, {}},
                                [&](Engine& eng) { return eng.two_edge(gf, u, v, second, first); });
    CycleCheck cc;
    cc.length = r.path.size();
    const std::size_t n = g.num_vertices();
    cc.required = (2 * n + 1 + 2) / 3;
    for (const Bridge& b : bridges_of(gf, Subgraph::of_cycle(r.path)))
        if (!b.trivial && b.interior.size() != 1) cc.degenerate = true;
    cc.holds = cc.length >= cc.required;
    r.trace.push_back(std::string("cycle length ") + std::to_string(cc.length) + ", bound " + std::to_string(cc.required) +
                      (cc.degenerate ? " (degenerate: bound not asserted)" : ""));
    if (o.verify && !cc.degenerate && !cc.holds)
        throw ContractError("cycle shorter than ceil((2n+1)/3)", r.trace);
    r.cycle = cc;
    return r;
}

}  // namespace tutte

#endif  // TUTTE_ENGINE_HPP
