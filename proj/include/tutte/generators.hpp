#ifndef TUTTE_GENERATORS_HPP
#define TUTTE_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tutte/connectivity.hpp"
#include "tutte/plane_graph.hpp"

namespace tutte {

enum class Family { stacked, wheel, prism, antiprism, octahedron, random_circuit };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::stacked: return "stacked";
        case Family::wheel: return "wheel";
        case Family::prism: return "prism";
        case Family::antiprism: return "antiprism";
        case Family::octahedron: return "octahedron";
        case Family::random_circuit: return "random_circuit";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    for (Family f : {Family::stacked, Family::wheel, Family::prism, Family::antiprism, Family::octahedron,
                     Family::random_circuit})
        if (to_string(f) == s) return f;
    throw PreconditionError("unknown family '" + s + "'");
}

struct GeneratorSpec {
    Family family = Family::stacked;
    int n = 0;
    std::uint64_t seed = 0;
};

/// Cycle 1..n drawn clockwise on a circle with non-crossing chords inside.
inline PlaneGraph cycle_with_chords(int n, const std::vector<std::pair<VertexId, VertexId>>& chords = {}) {
    std::vector<std::vector<VertexId>> nb(n + 1);
    for (int i = 1; i <= n; ++i) {
        nb[i].push_back(i % n + 1);
        nb[i].push_back((i + n - 2) % n + 1);
    }
    for (auto [a, b] : chords) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    Rotations rot;
    for (int i = 1; i <= n; ++i) {
        auto r = nb[i];
        // clockwise around a convex vertex: by clockwise distance along the circle
        std::sort(r.begin(), r.end(), [&](VertexId p, VertexId q) { return (p - i + n) % n < (q - i + n) % n; });
        rot[i] = r;
    }
    std::vector<VertexId> outer;
    for (int i = 1; i <= n; ++i) outer.push_back(i);
    return PlaneGraph::build(std::move(rot), outer);
}

/// Wheel with rim 1..k (clockwise) and hub k+1.
inline PlaneGraph wheel(int k) {
    if (k < 3) throw PreconditionError("wheel needs a rim of at least 3 vertices");
    Rotations rot;
    const VertexId hub = k + 1;
    for (int i = 1; i <= k; ++i) rot[i] = {i % k + 1, hub, (i + k - 2) % k + 1};
    for (int i = 1; i <= k; ++i) rot[hub].push_back(i);
    std::vector<VertexId> outer;
    for (int i = 1; i <= k; ++i) outer.push_back(i);
    return PlaneGraph::build(std::move(rot), outer);
}

/// k-gonal prism: outer cycle 1..k, inner cycle k+1..2k, rungs i-(i+k).
inline PlaneGraph prism(int k) {
    if (k < 3) throw PreconditionError("prism needs k >= 3");
    Rotations rot;
    auto o = [k](int i) { return (i - 1 + k) % k + 1; };
    auto in = [k, o](int i) { return o(i) + k; };
    for (int i = 1; i <= k; ++i) {
        rot[o(i)] = {o(i + 1), in(i), o(i - 1)};
        rot[in(i)] = {o(i), in(i + 1), in(i - 1)};
    }
    std::vector<VertexId> outer;
    for (int i = 1; i <= k; ++i) outer.push_back(i);
    return PlaneGraph::build(std::move(rot), outer);
}

/// k-gonal antiprism: outer cycle 1..k, inner cycle k+1..2k; inner k+i sits
/// between outer i and i+1.
inline PlaneGraph antiprism(int k) {
    if (k < 3) throw PreconditionError("antiprism needs k >= 3");
    Rotations rot;
    auto o = [k](int i) { return (i - 1 + k) % k + 1; };
    auto in = [k, o](int i) { return o(i) + k; };
    for (int i = 1; i <= k; ++i) {
        rot[o(i)] = {o(i + 1), in(i), in(i - 1), o(i - 1)};
        rot[in(i)] = {o(i + 1), in(i + 1), in(i - 1), o(i)};
    }
    std::vector<VertexId> outer;
    for (int i = 1; i <= k; ++i) outer.push_back(i);
    return PlaneGraph::build(std::move(rot), outer);
}

namespace detail {

/// Splitmix-style step so that outputs do not depend on the standard
/// library's distribution implementations.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace detail

/// Triangle 1,2,3 with vertices 4..n each stacked into a random inner face.
inline PlaneGraph stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("stacked triangulation needs n >= 3");
    std::mt19937_64 rng(seed);
    Rotations rot{{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2}}};
    PlaneGraph g = PlaneGraph::build(rot, std::vector<VertexId>{1, 2, 3});
    for (VertexId w = 4; w <= n; ++w) {
        std::vector<std::size_t> inner;
        for (std::size_t f = 0; f < g.num_faces(); ++f)
            if (f != g.outer_face_index()) inner.push_back(f);
        const auto& face = g.faces()[inner[detail::pick(rng, inner.size())]];
        const VertexId a = face[0], b = face[1], c = face[2];
        rot = g.rotations();
        detail::insert_after(rot[a], c, w);
        detail::insert_after(rot[b], a, w);
        detail::insert_after(rot[c], b, w);
        rot[w] = {a, c, b};
        g = PlaneGraph::build(std::move(rot), std::vector<VertexId>{1, 2, 3});
    }
    return g;
}

/// Stacked triangulation thinned by seeded edge deletions that keep it a
/// circuit graph.
inline PlaneGraph random_circuit_graph(int n, std::uint64_t seed) {
    PlaneGraph g = stacked_triangulation(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < n; ++attempt) {
        const auto es = g.edges();
        const Edge e = es[detail::pick(rng, es.size())];
        const auto& walk = g.outer_walk();
        std::optional<HalfEdge> ref;
        for (std::size_t i = 0; i < walk.size() && !ref; ++i) {
            const HalfEdge h{walk[i], walk[(i + 1) % walk.size()]};
            if (Edge::of(h.from, h.to) != e) ref = h;
        }
        try {
            PlaneGraph candidate = delete_edge(g, e.a, e.b, *ref);
            if (is_circuit_graph(candidate)) g = std::move(candidate);
        } catch (const Error&) {
        }
    }
    return g;
}

inline PlaneGraph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::stacked:
            return stacked_triangulation(spec.n, spec.seed);
        case Family::wheel:
            if (spec.n < 4) throw PreconditionError("wheel needs n >= 4");
            return wheel(spec.n - 1);
        case Family::prism:
            if (spec.n < 6 || spec.n % 2) throw PreconditionError("prism needs an even n >= 6");
            return prism(spec.n / 2);
        case Family::antiprism:
            if (spec.n < 6 || spec.n % 2) throw PreconditionError("antiprism needs an even n >= 6");
            return antiprism(spec.n / 2);
        case Family::octahedron:
            if (spec.n != 6) throw PreconditionError("octahedron has n = 6");
            return antiprism(3);
        case Family::random_circuit:
            if (spec.n < 3) throw PreconditionError("random_circuit needs n >= 3");
            return random_circuit_graph(spec.n, spec.seed);
    }
    throw PreconditionError("unknown family");
}

}  // namespace tutte

#endif  // TUTTE_GENERATORS_HPP
