#pragma once

#include <string>
#include <vector>

#include "floorcount/tropical.hpp"

namespace fixtures {

using floorcount::IntVec;
using floorcount::Rat;
using floorcount::TropicalCurve;

struct CurveBuilder {
    TropicalCurve curve;

    CurveBuilder& vertex(const std::string& id, long long x, long long y) {
        curve.vertices.push_back({id, Rat(x), Rat(y)});
        return *this;
    }
    CurveBuilder& edge(const std::string& a, const std::string& b, int weight = 1) {
        curve.bounded.push_back(
            {curve.vertex_index(a), curve.vertex_index(b), weight});
        return *this;
    }
    CurveBuilder& ray(const std::string& v, long long dx, long long dy,
                      int weight = 1) {
        curve.unbounded.push_back({curve.vertex_index(v), IntVec{dx, dy}, weight});
        return *this;
    }
};

// Tropical line: one vertex, ends (-1,0), (0,-1), (1,1).
inline TropicalCurve line() {
    CurveBuilder b;
    b.vertex("s", 0, 0).ray("s", -1, 0).ray("s", 0, -1).ray("s", 1, 1);
    return b.curve;
}

// Line with weight 2 on the diagonal end: balancing fails.
inline TropicalCurve unbalanced_line() {
    CurveBuilder b;
    b.vertex("s", 0, 0).ray("s", -1, 0).ray("s", 0, -1).ray("s", 1, 1, 2);
    return b.curve;
}

// Balanced six-valent star; no degree, not nodal.
inline TropicalCurve six_valent_star() {
    CurveBuilder b;
    b.vertex("s", 0, 0)
        .ray("s", 1, 0)
        .ray("s", -1, 0)
        .ray("s", 0, 1)
        .ray("s", 0, -1)
        .ray("s", 1, 1)
        .ray("s", -1, -1);
    return b.curve;
}

// Conic stretched into two floors joined by one elevator.
inline TropicalCurve stretched_conic() {
    CurveBuilder b;
    b.vertex("a1", 0, 0)
        .vertex("a2", 1, 1)
        .vertex("a3", 2, 3)
        .vertex("b1", 2, 10)
        .edge("a1", "a2")
        .edge("a2", "a3")
        .edge("a3", "b1")
        .ray("a1", -1, 0)
        .ray("a1", 0, -1)
        .ray("a2", 0, -1)
        .ray("a3", 1, 1)
        .ray("b1", -1, 0)
        .ray("b1", 1, 1);
    return b.curve;
}

// Rational cubic stretched into three floors; one downward elevator
// passes through a crossing of the bottom floor.
inline TropicalCurve three_floor_cubic() {
    CurveBuilder b;
    b.vertex("a1", 0, 0)
        .vertex("a2", 1, 1)
        .vertex("a3", 2, 3)
        .vertex("x", 3, 4)
        .vertex("b1", 2, 20)
        .vertex("b2", 3, 21)
        .vertex("b3", 4, 23)
        .vertex("c1", 4, 40)
        .edge("a1", "a2")
        .edge("a2", "a3")
        .edge("a3", "x")
        .edge("a3", "b1")
        .edge("b1", "b2")
        .edge("b2", "x")
        .edge("b2", "b3")
        .edge("b3", "c1")
        .ray("a1", -1, 0)
        .ray("a1", 0, -1)
        .ray("a2", 0, -1)
        .ray("x", 0, -1)
        .ray("x", 1, 1)
        .ray("b1", -1, 0)
        .ray("b3", 1, 1)
        .ray("c1", -1, 0)
        .ray("c1", 1, 1);
    return b.curve;
}

// Rational cubic with a weight-2 elevator: multiplicity 4, real 0.
inline TropicalCurve weight2_cubic() {
    CurveBuilder b;
    b.vertex("a1", 0, 0)
        .vertex("a2", 1, 1)
        .vertex("a3", 2, 3)
        .vertex("a4", 3, 6)
        .vertex("b1", 3, 30)
        .vertex("b2", 4, 32)
        .vertex("c1", 4, 50)
        .edge("a1", "a2")
        .edge("a2", "a3")
        .edge("a3", "a4")
        .edge("a4", "b1", 2)
        .edge("b1", "b2")
        .edge("b2", "c1")
        .ray("a1", -1, 0)
        .ray("a1", 0, -1)
        .ray("a2", 0, -1)
        .ray("a3", 0, -1)
        .ray("a4", 1, 1)
        .ray("b1", -1, 0)
        .ray("b2", 1, 1)
        .ray("c1", -1, 0)
        .ray("c1", 1, 1);
    return b.curve;
}

// Genus-1 cubic: two parallel elevators out of the bottom floor.
inline TropicalCurve genus1_cubic() {
    CurveBuilder b;
    b.vertex("a1", 0, 0)
        .vertex("a2", 1, 1)
        .vertex("a3", 2, 3)
        .vertex("a4", 3, 4)
        .vertex("a5", 4, 6)
        .vertex("b1", 2, 20)
        .vertex("b2", 3, 21)
        .vertex("b3", 4, 21)
        .vertex("c1", 3, 40)
        .edge("a1", "a2")
        .edge("a2", "a3")
        .edge("a3", "a4")
        .edge("a4", "a5")
        .edge("a3", "b1")
        .edge("a5", "b3")
        .edge("b1", "b2")
        .edge("b2", "b3")
        .edge("b2", "c1")
        .ray("a1", -1, 0)
        .ray("a1", 0, -1)
        .ray("a2", 0, -1)
        .ray("a4", 0, -1)
        .ray("a5", 1, 1)
        .ray("b1", -1, 0)
        .ray("b3", 1, 1)
        .ray("c1", -1, 0)
        .ray("c1", 1, 1);
    return b.curve;
}

// Two tropical lines crossing at a node: a connected reducible conic.
// Balanced and nodal with degree 2, but genus and floor decomposition
// must reject it.
inline TropicalCurve crossed_lines() {
    CurveBuilder b;
    b.vertex("l1", 0, 0)
        .vertex("x", 1, 1)
        .vertex("l2", 1, 5)
        .edge("l1", "x")
        .edge("l2", "x")
        .ray("l1", -1, 0)
        .ray("l1", 0, -1)
        .ray("x", 1, 1)
        .ray("x", 0, -1)
        .ray("l2", -1, 0)
        .ray("l2", 1, 1);
    return b.curve;
}

}  // namespace fixtures
