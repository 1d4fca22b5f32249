#pragma once

#include <string>
#include <vector>

#include "floorcount/diagram.hpp"

namespace fixtures {

inline floorcount::FloorDiagram make_diagram(int degree, int genus,
                                             std::vector<int> unbounded,
                                             std::vector<floorcount::DiagramEdge> edges) {
    floorcount::FloorDiagram d;
    d.degree = degree;
    d.genus = genus;
    for (int v = 1; v <= static_cast<int>(unbounded.size()); ++v)
        d.vertex_ids.push_back("v" + std::to_string(v));
    d.unbounded = std::move(unbounded);
    d.bounded = std::move(edges);
    return d;
}

// The unique degree-1 diagram: one floor, one unbounded edge.
inline floorcount::FloorDiagram degree1() { return make_diagram(1, 0, {1}, {}); }

// The unique degree-2 diagram: two unbounded edges at the bottom floor.
inline floorcount::FloorDiagram degree2() {
    return make_diagram(2, 0, {2, 0}, {{0, 1, 1}});
}

// Degree-3 path with a weight-2 edge; multiplicity 4, one marking.
inline floorcount::FloorDiagram cubic_weight2() {
    return make_diagram(3, 0, {3, 0, 0}, {{0, 1, 2}, {1, 2, 1}});
}

// Degree-3 path with all weights 1; five markings.
inline floorcount::FloorDiagram cubic_path() {
    return make_diagram(3, 0, {2, 1, 0}, {{0, 1, 1}, {1, 2, 1}});
}

// Degree-3 star: two branches out of the bottom floor; three markings.
inline floorcount::FloorDiagram cubic_star() {
    return make_diagram(3, 0, {3, 0, 0}, {{0, 1, 1}, {0, 2, 1}});
}

// The unique degree-3 genus-1 diagram: a doubled edge.
inline floorcount::FloorDiagram cubic_genus1() {
    return make_diagram(3, 1, {3, 0, 0}, {{0, 1, 1}, {0, 1, 1}, {1, 2, 1}});
}

// Degree-4 path with weights 3, 2, 1; multiplicity 36.
inline floorcount::FloorDiagram quartic_path_321() {
    return make_diagram(4, 0, {4, 0, 0, 0}, {{0, 1, 3}, {1, 2, 2}, {2, 3, 1}});
}

// Top-genus diagram of any degree: a chain of parallel weight-1 bundles
// of sizes d-1, d-2, ..., 1 below d unbounded edges.
inline floorcount::FloorDiagram top_genus(int degree) {
    std::vector<int> unbounded(degree, 0);
    unbounded[0] = degree;
    std::vector<floorcount::DiagramEdge> edges;
    for (int k = 0; k + 1 < degree; ++k)
        for (int copy = 0; copy < degree - 1 - k; ++copy)
            edges.push_back({k, k + 1, 1});
    const int genus = (degree - 1) * (degree - 2) / 2;
    return make_diagram(degree, genus, std::move(unbounded), std::move(edges));
}

// Divergence 2 at the top vertex: not a floor diagram.
inline floorcount::FloorDiagram invalid_path3() {
    return make_diagram(3, 0, {1, 1, 1}, {{0, 1, 1}, {1, 2, 1}});
}

}  // namespace fixtures
