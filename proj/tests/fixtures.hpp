#ifndef TUTTE_TESTS_FIXTURES_HPP
#define TUTTE_TESTS_FIXTURES_HPP

#include <algorithm>

#include "tutte/tutte.hpp"

namespace fx {

using namespace tutte;

inline PlaneGraph k3() { return cycle_with_chords(3); }
inline PlaneGraph k4() { return stacked_triangulation(4, 0); }       // outer 1 2 3, centre 4
inline PlaneGraph w5() { return wheel(5); }                           // rim 1..5, hub 6
inline PlaneGraph small_wheel() { return wheel(4); }                  // rim 1..4, hub 5
inline PlaneGraph c6() { return cycle_with_chords(6); }
inline PlaneGraph c8() { return cycle_with_chords(8); }
inline PlaneGraph c6_chord() { return cycle_with_chords(6, {{2, 5}}); }
inline PlaneGraph c8_chord() { return cycle_with_chords(8, {{3, 6}}); }
inline PlaneGraph c8_nested() { return cycle_with_chords(8, {{2, 7}, {3, 6}}); }
inline PlaneGraph fan() { return cycle_with_chords(6, {{1, 3}, {1, 4}, {1, 5}}); }

inline PlaneGraph prism_square_outside() {
    const PlaneGraph p = prism(3);
    return with_outer_face(p, *face_with_edges(p, {Edge::of(1, 2), Edge::of(2, 5), Edge::of(5, 4), Edge::of(4, 1)}));
}

inline Separation separation_at(const PlaneGraph& g, VertexId a, VertexId b) {
    for (const auto& s : two_separations(g))
        if (s.cut == std::pair<VertexId, VertexId>{a, b}) return s;
    throw Error("no separation at that cut");
}

inline bool contains(const Path& p, VertexId v) { return std::find(p.begin(), p.end(), v) != p.end(); }

}  // namespace fx

#endif  // TUTTE_TESTS_FIXTURES_HPP
