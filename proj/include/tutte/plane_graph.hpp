#ifndef TUTTE_PLANE_GRAPH_HPP
#define TUTTE_PLANE_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tutte {

using VertexId = int;

/// A path as its vertex sequence; consecutive vertices are adjacent.
using Path = std::vector<VertexId>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Undirected edge with endpoints stored as (min, max).
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    static Edge of(VertexId x, VertexId y) { return x < y ? Edge{x, y} : Edge{y, x}; }

    bool has(VertexId v) const { return a == v || b == v; }
    VertexId other(VertexId v) const { return v == a ? b : a; }
    bool shares_vertex(const Edge& o) const { return has(o.a) || has(o.b); }

    auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

struct HalfEdge {
    VertexId from = 0;
    VertexId to = 0;
    auto operator<=>(const HalfEdge&) const = default;
};

/// Clockwise neighbour lists keyed by vertex id.
using Rotations = std::map<VertexId, std::vector<VertexId>>;

/// Insertion point for a new edge: the new neighbour goes immediately after
/// `after` in the clockwise rotation of `at`.
struct Corner {
    VertexId at = 0;
    VertexId after = 0;
};

/// Connected simple plane graph given by a rotation system.
///
/// Faces are traced by the rule: after the half-edge (a, b) comes
/// (b, c) where c follows a in the clockwise rotation at b. Every face is then
/// kept on the left of its walk, so the walk of the infinite face runs
/// clockwise in the drawing and is reported as is.
///
/// Instances are immutable; every surgery returns a new graph.
class PlaneGraph {
public:
    /// Builds and validates; the outer face is the face containing `outer_ref`.
    static PlaneGraph build(Rotations rotations, HalfEdge outer_ref) {
        PlaneGraph g(std::move(rotations));
        const auto it = g.face_of_.find(outer_ref);
        if (it == g.face_of_.end())
            throw Error("outer reference half-edge " + std::to_string(outer_ref.from) + "->" +
                        std::to_string(outer_ref.to) + " is not in the graph");
        g.outer_ = it->second;
        return g;
    }

    /// Builds and validates; `outer_walk` must be a face walk (cyclic, clockwise).
    static PlaneGraph build(Rotations rotations, const std::vector<VertexId>& outer_walk) {
        PlaneGraph g(std::move(rotations));
        if (outer_walk.size() < 2) throw Error("outer walk needs at least two vertices");
        const HalfEdge ref{outer_walk[0], outer_walk[1]};
        const auto it = g.face_of_.find(ref);
        if (it == g.face_of_.end()) throw Error("declared outer walk is not a face");
        const auto& face = g.faces_[it->second];
        if (face != outer_walk) throw Error("declared outer walk is not a face");
        g.outer_ = it->second;
        return g;
    }

    const Rotations& rotations() const { return rot_; }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(rot_.size());
        for (const auto& [v, _] : rot_) out.push_back(v);
        return out;
    }

    std::size_t num_vertices() const { return rot_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t num_faces() const { return faces_.size(); }

    bool has_vertex(VertexId v) const { return rot_.count(v) != 0; }

    bool has_edge(VertexId a, VertexId b) const {
        const auto it = rot_.find(a);
        if (it == rot_.end()) return false;
        return std::find(it->second.begin(), it->second.end(), b) != it->second.end();
    }
    bool has_edge(const Edge& e) const { return has_edge(e.a, e.b); }

    const std::vector<VertexId>& rotation(VertexId v) const {
        const auto it = rot_.find(v);
        if (it == rot_.end()) throw Error("unknown vertex " + std::to_string(v));
        return it->second;
    }

    const std::vector<VertexId>& neighbors(VertexId v) const { return rotation(v); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const auto& [v, nbrs] : rot_)
            for (VertexId w : nbrs)
                if (v < w) out.push_back(Edge{v, w});
        return out;
    }

    /// Neighbour following `from` clockwise around `at`.
    VertexId next_clockwise(VertexId at, VertexId from) const {
        const auto& r = rotation(at);
        const auto it = std::find(r.begin(), r.end(), from);
        if (it == r.end()) throw Error("not adjacent");
        const auto next = std::next(it);
        return next == r.end() ? r.front() : *next;
    }

    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
    std::size_t outer_face_index() const { return outer_; }
    const std::vector<VertexId>& outer_walk() const { return faces_[outer_]; }

    std::size_t face_of(HalfEdge h) const {
        const auto it = face_of_.find(h);
        if (it == face_of_.end()) throw Error("unknown half-edge");
        return it->second;
    }

    bool outer_is_cycle() const {
        const auto& w = outer_walk();
        std::set<VertexId> seen(w.begin(), w.end());
        return seen.size() == w.size() && w.size() >= 3;
    }

    /// Smallest positive id not used by this graph or by `reserved`.
    VertexId fresh_id(const std::set<VertexId>& reserved = {}) const {
        VertexId id = 1;
        while (has_vertex(id) || reserved.count(id)) ++id;
        return id;
    }

    bool operator==(const PlaneGraph& o) const { return rot_ == o.rot_ && outer_walk() == o.outer_walk(); }

private:
    explicit PlaneGraph(Rotations rotations) : rot_(std::move(rotations)) {
        validate_rotations();
        trace_faces();
        const long v = static_cast<long>(rot_.size());
        const long e = static_cast<long>(num_edges_);
        const long f = static_cast<long>(faces_.size());
        if (v - e + f != 2)
            throw Error("Euler check failed: V - E + F = " + std::to_string(v - e + f));
    }

    void validate_rotations() {
        if (rot_.size() < 2) throw Error("a plane graph needs at least two vertices");
        std::size_t degree_sum = 0;
        for (const auto& [v, nbrs] : rot_) {
            if (v <= 0) throw Error("vertex ids must be positive");
            std::set<VertexId> seen;
            for (VertexId w : nbrs) {
                if (w == v) throw Error("loop at vertex " + std::to_string(v));
                if (!seen.insert(w).second)
                    throw Error("parallel edge " + std::to_string(v) + "-" + std::to_string(w));
                const auto it = rot_.find(w);
                if (it == rot_.end())
                    throw Error("vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(w));
                if (std::find(it->second.begin(), it->second.end(), v) == it->second.end())
                    throw Error("edge " + std::to_string(v) + "-" + std::to_string(w) + " is not symmetric");
            }
            degree_sum += nbrs.size();
        }
        num_edges_ = degree_sum / 2;
        // connectivity
        std::set<VertexId> seen{rot_.begin()->first};
        std::vector<VertexId> stack{rot_.begin()->first};
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : rot_.at(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != rot_.size()) throw Error("graph is not connected");
    }

    void trace_faces() {
        for (const auto& [v, nbrs] : rot_) {
            for (VertexId w : nbrs) {
                const HalfEdge start{v, w};
                if (face_of_.count(start)) continue;
                const std::size_t id = faces_.size();
                std::vector<VertexId> walk;
                HalfEdge h = start;
                do {
                    if (!face_of_.emplace(h, id).second) throw Error("face traversal does not close");
                    walk.push_back(h.from);
                    h = HalfEdge{h.to, next_clockwise(h.to, h.from)};
                } while (h != start);
                faces_.push_back(std::move(walk));
            }
        }
    }

    Rotations rot_;
    std::size_t num_edges_ = 0;
    std::vector<std::vector<VertexId>> faces_;
    std::map<HalfEdge, std::size_t> face_of_;
    std::size_t outer_ = 0;
};

/// The outer face walk of a graph whose outer walk is a cycle, clockwise.
class OuterCycle {
public:
    OuterCycle() = default;

    explicit OuterCycle(std::vector<VertexId> cycle) : cycle_(std::move(cycle)) {
        for (std::size_t i = 0; i < cycle_.size(); ++i)
            if (!pos_.emplace(cycle_[i], i).second) throw Error("outer walk repeats a vertex");
        if (cycle_.size() < 3) throw Error("outer cycle needs at least three vertices");
    }

    static OuterCycle of(const PlaneGraph& g) { return OuterCycle(g.outer_walk()); }

    std::size_t size() const { return cycle_.size(); }
    const std::vector<VertexId>& vertices() const { return cycle_; }
    VertexId at(std::size_t i) const { return cycle_[i % cycle_.size()]; }
    bool contains(VertexId v) const { return pos_.count(v) != 0; }

    std::size_t position(VertexId v) const {
        const auto it = pos_.find(v);
        if (it == pos_.end()) throw PreconditionError("vertex " + std::to_string(v) + " is not on the outer cycle");
        return it->second;
    }

    VertexId next(VertexId v) const { return at(position(v) + 1); }
    VertexId prev(VertexId v) const { return at(position(v) + cycle_.size() - 1); }

    bool has_edge(const Edge& e) const {
        return contains(e.a) && contains(e.b) && (next(e.a) == e.b || next(e.b) == e.a);
    }

    /// The edge as a clockwise half-edge (tail, head) along the cycle.
    HalfEdge orient(const Edge& e) const {
        if (!has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is not on the outer cycle");
        return next(e.a) == e.b ? HalfEdge{e.a, e.b} : HalfEdge{e.b, e.a};
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < cycle_.size(); ++i) out.push_back(Edge::of(at(i), at(i + 1)));
        return out;
    }

    /// Vertices met going clockwise from `from` to `to`, both included.
    std::vector<VertexId> arc(VertexId from, VertexId to) const {
        std::vector<VertexId> out;
        std::size_t i = position(from);
        const std::size_t j = position(to);
        out.push_back(cycle_[i]);
        while (i != j) {
            i = (i + 1) % cycle_.size();
            out.push_back(cycle_[i]);
        }
        return out;
    }

private:
    std::vector<VertexId> cycle_;
    std::map<VertexId, std::size_t> pos_;
};

/// Endpoint of a clockwise segment: a vertex or an edge of the outer cycle.
using Endpoint = std::variant<VertexId, Edge>;

struct Segment {
    Endpoint x;
    Endpoint y;
};

inline bool is_edge(const Endpoint& p) { return std::holds_alternative<Edge>(p); }

inline std::string to_string(const Endpoint& p) {
    if (const auto* e = std::get_if<Edge>(&p)) return to_string(*e);
    return std::to_string(std::get<VertexId>(p));
}

/// Whether two endpoints are incident (vertex on edge, or edges sharing a vertex).
inline bool incident(const Endpoint& x, const Endpoint& y) {
    const auto* ex = std::get_if<Edge>(&x);
    const auto* ey = std::get_if<Edge>(&y);
    if (ex && ey) return *ex != *ey && ex->shares_vertex(*ey);
    if (ex) return ex->has(std::get<VertexId>(y));
    if (ey) return ey->has(std::get<VertexId>(x));
    return false;
}

/// The clockwise subpath xCy; edge endpoints are excluded from its edge set.
inline Path clockwise_segment(const OuterCycle& c, const Segment& s) {
    VertexId start = 0;
    VertexId end = 0;
    if (const auto* e = std::get_if<Edge>(&s.x))
        start = c.orient(*e).to;
    else
        start = std::get<VertexId>(s.x);
    if (const auto* e = std::get_if<Edge>(&s.y))
        end = c.orient(*e).from;
    else
        end = std::get<VertexId>(s.y);
    c.position(start);
    c.position(end);
    return c.arc(start, end);
}

// ---------------------------------------------------------------------------
// File format

inline PlaneGraph load_plane_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    auto fail = [](const std::string& msg) -> ParseError { return ParseError("parse error: " + msg); };
    if (lines.size() < 3) throw fail("file too short");
    {
        std::istringstream h(lines[0]);
        std::string magic, version, rest;
        h >> magic >> version;
        if (magic != "planegraph" || version != "v1" || (h >> rest)) throw fail("expected header 'planegraph v1'");
    }
    long n = 0;
    {
        std::istringstream h(lines[1]);
        std::string tag, rest;
        if (!(h >> tag >> n) || tag != "n" || n < 0 || (h >> rest)) throw fail("expected 'n <N>'");
    }
    if (lines.size() != static_cast<std::size_t>(n) + 3) throw fail("expected " + std::to_string(n) + " vertex lines followed by 'outer:'");
    Rotations rot;
    for (long i = 0; i < n; ++i) {
        const std::string& l = lines[2 + i];
        const auto colon = l.find(':');
        if (colon == std::string::npos) throw fail("missing ':' in '" + l + "'");
        std::istringstream head(l.substr(0, colon));
        VertexId v = 0;
        std::string extra;
        if (!(head >> v) || (head >> extra)) throw fail("bad vertex id in '" + l + "'");
        std::istringstream body(l.substr(colon + 1));
        std::vector<VertexId> nbrs;
        std::string tok;
        while (body >> tok) {
            try {
                std::size_t used = 0;
                nbrs.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw fail("bad neighbour '" + tok + "'");
            } catch (const std::logic_error&) {
                throw fail("bad neighbour '" + tok + "'");
            }
        }
        if (!rot.emplace(v, std::move(nbrs)).second) throw fail("duplicate vertex " + std::to_string(v));
    }
    const std::string& last = lines.back();
    if (last.rfind("outer:", 0) != 0) throw fail("expected 'outer:' line");
    std::istringstream ob(last.substr(6));
    std::vector<VertexId> outer;
    VertexId v = 0;
    while (ob >> v) outer.push_back(v);
    if (!ob.eof()) throw fail("bad outer walk");
    return PlaneGraph::build(std::move(rot), outer);
}

inline std::string serialize(const PlaneGraph& g) {
    std::ostringstream out;
    out << "planegraph v1\n" << "n " << g.num_vertices() << "\n";
    for (const auto& [v, nbrs] : g.rotations()) {
        out << v << ":";
        for (VertexId w : nbrs) out << ' ' << w;
        out << "\n";
    }
    out << "outer:";
    for (VertexId w : g.outer_walk()) out << ' ' << w;
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Surgeries

namespace detail {

inline void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId value) {
    const auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw Error("corner neighbour not found");
    rot.insert(std::next(it), value);
}

/// A half-edge of the current outer walk, used to keep the outer face designated.
inline HalfEdge outer_reference(const PlaneGraph& g) {
    const auto& w = g.outer_walk();
    return HalfEdge{w[0], w[1 % w.size()]};
}

}  // namespace detail

/// Inserts edge ab at the given corners. The outer face of the result is the
/// face containing `outer_ref`.
inline PlaneGraph add_edge_at_corners(const PlaneGraph& g, Corner ca, Corner cb, HalfEdge outer_ref) {
    if (ca.at == cb.at) throw PreconditionError("cannot add a loop");
    if (g.has_edge(ca.at, cb.at))
        throw PreconditionError("edge " + to_string(Edge::of(ca.at, cb.at)) + " already present");
    const std::size_t fa = g.face_of(HalfEdge{ca.after, ca.at});
    const std::size_t fb = g.face_of(HalfEdge{cb.after, cb.at});
    if (fa != fb) throw PreconditionError("corners do not lie on a common face");
    Rotations rot = g.rotations();
    detail::insert_after(rot[ca.at], ca.after, cb.at);
    detail::insert_after(rot[cb.at], cb.after, ca.at);
    return PlaneGraph::build(std::move(rot), outer_ref);
}

/// Embeds ab inside face `face`, splitting it. Uses the first occurrence of a
/// and b on the face walk. The outer face stays the one containing the first
/// half-edge of the current outer walk.
inline PlaneGraph add_edge_in_face(const PlaneGraph& g, VertexId a, VertexId b, std::size_t face) {
    if (a == b) throw PreconditionError("a = b");
    if (!g.has_vertex(a) || !g.has_vertex(b)) throw PreconditionError("unknown vertex");
    if (g.has_edge(a, b)) throw PreconditionError("edge " + to_string(Edge::of(a, b)) + " already present");
    if (face >= g.num_faces()) throw PreconditionError("unknown face");
    const auto& walk = g.faces()[face];
    const std::size_t k = walk.size();
    std::optional<Corner> ca, cb;
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId prev = walk[(i + k - 1) % k];
        if (walk[i] == a && !ca) ca = Corner{a, prev};
        if (walk[i] == b && !cb) cb = Corner{b, prev};
    }
    if (!ca || !cb) throw PreconditionError("vertices do not both lie on the face");
    return add_edge_at_corners(g, *ca, *cb, detail::outer_reference(g));
}

inline PlaneGraph delete_edge(const PlaneGraph& g, VertexId a, VertexId b, HalfEdge outer_ref) {
    if (!g.has_edge(a, b)) throw PreconditionError("edge not present");
    Rotations rot = g.rotations();
    std::erase(rot[a], b);
    std::erase(rot[b], a);
    return PlaneGraph::build(std::move(rot), outer_ref);
}

/// Keeps the given vertices and edges with the inherited rotation order.
inline PlaneGraph restrict_to(const PlaneGraph& g, const std::set<VertexId>& keep_vertices,
                              const std::set<Edge>& keep_edges, HalfEdge outer_ref) {
    Rotations rot;
    for (VertexId v : keep_vertices) {
        auto& r = rot[v];
        for (VertexId w : g.rotation(v))
            if (keep_vertices.count(w) && keep_edges.count(Edge::of(v, w))) r.push_back(w);
    }
    return PlaneGraph::build(std::move(rot), outer_ref);
}

/// Subgraph induced by `keep` with the inherited rotation order.
inline PlaneGraph induced(const PlaneGraph& g, const std::set<VertexId>& keep, HalfEdge outer_ref) {
    std::set<Edge> edges;
    for (const Edge& e : g.edges())
        if (keep.count(e.a) && keep.count(e.b)) edges.insert(e);
    return restrict_to(g, keep, edges, outer_ref);
}

/// Reflection of the embedding; the outer walk is reversed.
inline PlaneGraph mirror(const PlaneGraph& g) {
    Rotations rot = g.rotations();
    for (auto& [v, r] : rot) std::reverse(r.begin(), r.end());
    const auto& w = g.outer_walk();
    return PlaneGraph::build(std::move(rot), HalfEdge{w[1 % w.size()], w[0]});
}

enum class Replacement { nothing, edge, apex };

struct RegionReplaced {
    PlaneGraph graph;
    std::optional<VertexId> apex;
};

/// Deletes `region` (a vertex set whose neighbours outside it are exactly
/// x and y) and draws a replacement inside the area it occupied: an edge xy,
/// a new vertex adjacent to x and y, or nothing. When xy is already an edge
/// the edge replacement keeps that edge. `apex_id` names the new vertex.
inline RegionReplaced replace_region(const PlaneGraph& g, const std::set<VertexId>& region, VertexId x, VertexId y,
                                     Replacement what, HalfEdge outer_ref, VertexId apex_id = 0) {
    if (region.empty()) throw PreconditionError("empty region");
    if (region.count(x) || region.count(y) || x == y) throw PreconditionError("cut vertices inside region");
    for (VertexId r : region)
        for (VertexId w : g.rotation(r))
            if (!region.count(w) && w != x && w != y)
                throw PreconditionError("region is attached outside its cut");
    Rotations rot;
    for (const auto& [v, nbrs] : g.rotations())
        if (!region.count(v)) rot[v] = nbrs;
    const bool keep_chord = what == Replacement::edge && g.has_edge(x, y);
    for (VertexId end : {x, y}) {
        const VertexId target = what == Replacement::apex ? apex_id : (end == x ? y : x);
        auto& r = rot[end];
        const std::size_t k = r.size();
        // rotate so that a non-region neighbour comes first; the region block is then contiguous
        std::size_t start = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!region.count(r[i]) && region.count(r[(i + 1) % k])) start = (i + 1) % k;
        if (start == k) {
            if (std::all_of(r.begin(), r.end(), [&](VertexId w) { return region.count(w) != 0; })) start = 0;
            else throw PreconditionError("region not adjacent to cut vertex");
        }
        std::vector<VertexId> out;
        bool placed = false;
        bool in_block = true;
        for (std::size_t j = 0; j < k; ++j) {
            const VertexId w = r[(start + j) % k];
            if (region.count(w)) {
                if (!in_block) throw PreconditionError("region is not contiguous around a cut vertex");
                if (!placed && what != Replacement::nothing && !keep_chord) out.push_back(target);
                placed = true;
            } else {
                in_block = false;
                out.push_back(w);
            }
        }
        r = std::move(out);
    }
    std::optional<VertexId> apex;
    if (what == Replacement::apex) {
        if (g.has_vertex(apex_id) || apex_id <= 0) throw PreconditionError("apex id already in use");
        rot[apex_id] = {x, y};
        apex = apex_id;
    }
    return RegionReplaced{PlaneGraph::build(std::move(rot), outer_ref), apex};
}

}  // namespace tutte

#endif  // TUTTE_PLANE_GRAPH_HPP
