#ifndef TUTTE_CONNECTIVITY_HPP
#define TUTTE_CONNECTIVITY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tutte/plane_graph.hpp"

namespace tutte {

/// Plain adjacency lists; used for subgraphs that carry no embedding.
using Adjacency = std::map<VertexId, std::vector<VertexId>>;

/// Connected components of the graph minus `removed`, each sorted, ordered by
/// smallest member.
inline std::vector<std::set<VertexId>> components_without(const Adjacency& adj, const std::set<VertexId>& removed) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen;
    for (const auto& [s, _] : adj) {
        if (removed.count(s) || seen.count(s)) continue;
        std::set<VertexId> comp{s};
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj.at(v)) {
                if (removed.count(w) || seen.count(w)) continue;
                seen.insert(w);
                comp.insert(w);
                stack.push_back(w);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<std::set<VertexId>> components_without(const PlaneGraph& g, const std::set<VertexId>& removed) {
    return components_without(g.rotations(), removed);
}

/// A 2-separation given by its cut and the vertex sets of its two sides
/// (cut vertices belong to both). An edge joining the two cut vertices is
/// always assigned to side A.
struct Separation {
    std::pair<VertexId, VertexId> cut;
    std::set<VertexId> side_a;
    std::set<VertexId> side_b;

    /// Vertices of side B that are not cut vertices.
    std::set<VertexId> interior_b() const {
        std::set<VertexId> out = side_b;
        out.erase(cut.first);
        out.erase(cut.second);
        return out;
    }
    std::set<VertexId> interior_a() const {
        std::set<VertexId> out = side_a;
        out.erase(cut.first);
        out.erase(cut.second);
        return out;
    }
    bool is_cut_vertex(VertexId v) const { return v == cut.first || v == cut.second; }

    /// Whether edge `e` belongs to side A (respectively B) as a subgraph.
    bool edge_in_a(const Edge& e) const {
        if (is_cut_vertex(e.a) && is_cut_vertex(e.b)) return true;
        return side_a.count(e.a) && side_a.count(e.b);
    }
    bool edge_in_b(const Edge& e) const {
        if (is_cut_vertex(e.a) && is_cut_vertex(e.b)) return false;
        return side_b.count(e.a) && side_b.count(e.b);
    }
};

struct SeparationFilter {
    std::set<VertexId> keep_vertices;
    std::set<Edge> keep_edges;
};

namespace detail {

inline bool separation_keeps(const Separation& s, const SeparationFilter& f) {
    for (VertexId v : f.keep_vertices)
        if (!s.side_a.count(v)) return false;
    for (const Edge& e : f.keep_edges)
        if (!s.edge_in_a(e)) return false;
    return true;
}

inline bool is_two_connected(const Adjacency& adj) {
    if (adj.size() < 3) return false;
    if (components_without(adj, {}).size() != 1) return false;
    for (const auto& [v, _] : adj)
        if (components_without(adj, {v}).size() != 1) return false;
    return true;
}

}  // namespace detail

inline bool is_two_connected(const PlaneGraph& g) { return detail::is_two_connected(g.rotations()); }

/// Every 2-separation of G arising from a 2-cut (both sides have a vertex
/// outside the cut), ordered by cut pair.
///
/// Without a filter each separation is listed once, with side A holding the
/// smallest non-cut vertex. With a filter, side A is the kept side and must
/// contain the keep material. `maximal` keeps only separations whose side B is
/// not strictly contained in the side B of another listed separation.
inline std::vector<Separation> two_separations(const PlaneGraph& g, const std::optional<SeparationFilter>& filter = {},
                                               bool maximal = false) {
    if (!is_two_connected(g)) throw PreconditionError("two_separations requires a 2-connected graph");
    const auto verts = g.vertices();
    std::vector<Separation> out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const VertexId s = verts[i];
            const VertexId t = verts[j];
            const auto comps = components_without(g, {s, t});
            if (comps.size() < 2) continue;
            const std::size_t k = comps.size();
            // side B gets the subset `mask` of components; side A the rest.
            for (unsigned long mask = 1; mask + 1 < (1UL << k); ++mask) {
                if (!filter && (mask & 1UL)) continue;  // component 0 holds the smallest id
                Separation sep{{s, t}, {s, t}, {s, t}};
                for (std::size_t c = 0; c < k; ++c)
                    (mask >> c & 1UL ? sep.side_b : sep.side_a).insert(comps[c].begin(), comps[c].end());
                if (filter && !detail::separation_keeps(sep, *filter)) continue;
                out.push_back(std::move(sep));
            }
        }
    }
    if (!maximal) return out;
    std::vector<Separation> kept;
    for (const auto& s : out) {
        const bool dominated = std::any_of(out.begin(), out.end(), [&](const Separation& o) {
            if (o.side_b == s.side_b && o.cut == s.cut) return false;
            // side B as subgraphs: vertex containment plus the cut edge convention
            if (!std::includes(o.side_b.begin(), o.side_b.end(), s.side_b.begin(), s.side_b.end())) return false;
            if (o.side_b == s.side_b) return false;
            return true;
        });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

enum class CircuitStatus { ok, not_two_connected, outer_not_cycle, component_off_outer_cycle };

inline std::string to_string(CircuitStatus s) {
    switch (s) {
        case CircuitStatus::ok: return "ok";
        case CircuitStatus::not_two_connected: return "not 2-connected";
        case CircuitStatus::outer_not_cycle: return "outer walk is not a cycle";
        case CircuitStatus::component_off_outer_cycle: return "a 2-cut leaves a component away from the outer cycle";
    }
    return "unknown";
}

struct CircuitCheck {
    bool circuit = false;
    CircuitStatus reason = CircuitStatus::ok;
    std::optional<std::pair<VertexId, VertexId>> witness_cut;
    explicit operator bool() const { return circuit; }
};

/// Circuit-graph test. A component of G - T "contains an edge of C" when an
/// outer-cycle edge is incident with it, i.e. it holds an outer vertex.
inline CircuitCheck is_circuit_graph(const PlaneGraph& g) {
    if (!is_two_connected(g)) return {false, CircuitStatus::not_two_connected, {}};
    if (!g.outer_is_cycle()) return {false, CircuitStatus::outer_not_cycle, {}};
    const OuterCycle c = OuterCycle::of(g);
    const auto verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const auto comps = components_without(g, {verts[i], verts[j]});
            if (comps.size() < 2) continue;
            for (const auto& comp : comps)
                if (std::none_of(comp.begin(), comp.end(), [&](VertexId v) { return c.contains(v); }))
                    return {false, CircuitStatus::component_off_outer_cycle, std::pair{verts[i], verts[j]}};
        }
    return {true, CircuitStatus::ok, {}};
}

struct Block {
    std::set<VertexId> vertices;
    std::vector<Edge> edges;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::set<VertexId> cut_vertices;
};

/// Biconnected components by the edge-stack DFS; isolated vertices form no block.
inline BlockDecomposition blocks(const Adjacency& adj) {
    BlockDecomposition out;
    std::map<VertexId, int> disc, low;
    std::vector<Edge> stack;
    int time = 0;
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[v] = low[v] = ++time;
        int children = 0;
        for (VertexId w : adj.at(v)) {
            if (!disc.count(w)) {
                ++children;
                stack.push_back(Edge::of(v, w));
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent != 0 || children > 1) out.cut_vertices.insert(v);
                    Block b;
                    const Edge stop = Edge::of(v, w);
                    while (true) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        b.edges.push_back(e);
                        b.vertices.insert(e.a);
                        b.vertices.insert(e.b);
                        if (e == stop) break;
                    }
                    std::sort(b.edges.begin(), b.edges.end());
                    out.blocks.push_back(std::move(b));
                }
            } else if (w != parent && disc[w] < disc[v]) {
                stack.push_back(Edge::of(v, w));
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (const auto& [v, _] : adj)
        if (!disc.count(v)) dfs(v, 0);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

inline BlockDecomposition blocks(const PlaneGraph& g) { return blocks(g.rotations()); }

/// Adjacency of G with the vertices in `removed` deleted.
inline Adjacency without(const Adjacency& adj, const std::set<VertexId>& removed) {
    Adjacency out;
    for (const auto& [v, nbrs] : adj) {
        if (removed.count(v)) continue;
        auto& r = out[v];
        for (VertexId w : nbrs)
            if (!removed.count(w)) r.push_back(w);
    }
    return out;
}

/// Whether the clockwise segment xCy is good: no 2-separation (G1, G2) with
/// cut {s, t}, sCt inside xCy and G2, and |G2| >= 3.
///
/// Separations are taken literally, so a side may consist of the single edge
/// st; this makes the complement arc of an outer edge not good.
inline bool is_good_segment(const PlaneGraph& g, const OuterCycle& c, const Segment& seg) {
    const Path arc = clockwise_segment(c, seg);
    for (std::size_t i = 0; i < arc.size(); ++i) {
        for (std::size_t j = i + 1; j < arc.size(); ++j) {
            const VertexId s = arc[i];
            const VertexId t = arc[j];
            // sCt is arc[i..j]
            const auto comps = components_without(g, {s, t});
            std::set<VertexId> inner(arc.begin() + static_cast<long>(i) + 1, arc.begin() + static_cast<long>(j));
            std::size_t required = 0;
            for (const auto& comp : comps)
                if (std::any_of(comp.begin(), comp.end(), [&](VertexId v) { return inner.count(v) != 0; }))
                    ++required;
            const bool needs_edge = j == i + 1;
            const bool edge_free_for_g1 = g.has_edge(s, t) && !needs_edge;
            bool exists = false;
            if (required >= 1)
                exists = comps.size() > required || edge_free_for_g1;
            else
                exists = comps.size() >= 2;
            if (exists) return false;
        }
    }
    return true;
}

struct ConnectivityProfile {
    int kappa = 0;
    bool essentially_4 = false;
};

/// Exact vertex connectivity by subset enumeration (planar graphs have
/// kappa <= 5) and the essentially-4-connected test: every cut of size < 4
/// leaves exactly two components, one of them a single vertex.
inline ConnectivityProfile connectivity_profile(const PlaneGraph& g) {
    const auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    ConnectivityProfile p;
    p.kappa = -1;
    bool essential = components_without(g, {}).size() == 1;
    std::function<void(int, int, std::set<VertexId>&)> rec = [&](int start, int left, std::set<VertexId>& chosen) {
        if (left == 0) {
            const auto comps = components_without(g, chosen);
            if (comps.size() >= 2) {
                if (p.kappa < 0 || static_cast<int>(chosen.size()) < p.kappa) p.kappa = static_cast<int>(chosen.size());
                if (chosen.size() < 4) {
                    const bool ok = comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1);
                    if (!ok) essential = false;
                }
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            chosen.insert(verts[i]);
            rec(i + 1, left - 1, chosen);
            chosen.erase(verts[i]);
        }
    };
    for (int k = 0; k <= std::min(4, n - 2); ++k) {
        std::set<VertexId> chosen;
        if (k == 4 && p.kappa >= 0) break;
        rec(0, k, chosen);
    }
    if (p.kappa < 0) p.kappa = std::min(5, n - 1);
    p.essentially_4 = essential;
    return p;
}

/// Contracts one side of a 2-separation to a new vertex adjacent to exactly
/// the two cut vertices. Marked vertices and edges must not lie in the
/// contracted part.
struct Contracted {
    PlaneGraph graph;
    VertexId apex;
};

enum class SepSide { a, b };

inline Contracted contract_side(const PlaneGraph& g, const Separation& sep, SepSide side,
                                const SeparationFilter& marked = {}, const std::set<VertexId>& reserved_ids = {}) {
    const std::set<VertexId> region = side == SepSide::b ? sep.interior_b() : sep.interior_a();
    for (VertexId v : marked.keep_vertices)
        if (region.count(v)) throw PreconditionError("marked vertex " + std::to_string(v) + " inside the contracted side");
    for (const Edge& e : marked.keep_edges)
        if (region.count(e.a) || region.count(e.b))
            throw PreconditionError("marked edge " + to_string(e) + " inside the contracted side");
    std::optional<HalfEdge> ref;
    const auto& walk = g.outer_walk();
    for (std::size_t i = 0; i < walk.size() && !ref; ++i) {
        const HalfEdge h{walk[i], walk[(i + 1) % walk.size()]};
        if (!region.count(h.from) && !region.count(h.to)) ref = h;
    }
    if (!ref) throw PreconditionError("kept side has no outer edge");
    const auto [x, y] = sep.cut;
    const VertexId apex = g.fresh_id(reserved_ids);
    auto replaced = replace_region(g, region, x, y, Replacement::apex, *ref, apex);
    return Contracted{std::move(replaced.graph), apex};
}

}  // namespace tutte

#endif  // TUTTE_CONNECTIVITY_HPP
