#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/diagram.hpp"
#include "floorcount/validation.hpp"

namespace floorcount {

using Rat = boost::multiprecision::cpp_rational;

// Primitive integer direction vector.
struct IntVec {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const IntVec&, const IntVec&) = default;
    friend auto operator<=>(const IntVec&, const IntVec&) = default;
    IntVec operator-() const { return {-x, -y}; }
};

struct CurveVertex {
    std::string id;
    Rat x;
    Rat y;
};

struct CurveBoundedEdge {
    int v1 = 0;
    int v2 = 0;
    int weight = 1;
};

struct CurveUnboundedEdge {
    int vertex = 0;
    IntVec dir;
    int weight = 1;
};

struct EdgeId {
    enum class Kind { bounded, unbounded };
    Kind kind = Kind::bounded;
    int index = 0;
};

// Weighted rectilinear graph in the plane with exact rational vertex
// coordinates. Unbounded edges are rays leaving their vertex in a
// primitive integer direction.
struct TropicalCurve {
    std::vector<CurveVertex> vertices;
    std::vector<CurveBoundedEdge> bounded;
    std::vector<CurveUnboundedEdge> unbounded;

    int vertex_count() const { return static_cast<int>(vertices.size()); }

    int vertex_index(std::string_view id) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (vertices[i].id == id) return i;
        throw std::invalid_argument("unknown vertex id: " + std::string(id));
    }
};

// Reduces a rational displacement to the primitive integer vector with
// the same direction.
inline IntVec primitive_direction(const Rat& dx, const Rat& dy) {
    if (dx == 0 && dy == 0)
        throw std::invalid_argument("primitive_direction: zero displacement");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const BigInt scale = boost::multiprecision::lcm(denominator(dx), denominator(dy));
    BigInt nx = numerator(dx) * (scale / denominator(dx));
    BigInt ny = numerator(dy) * (scale / denominator(dy));
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(nx),
                                                boost::multiprecision::abs(ny));
    nx /= g;
    ny /= g;
    constexpr long long limit = 1LL << 31;
    if (boost::multiprecision::abs(nx) > limit || boost::multiprecision::abs(ny) > limit)
        throw std::domain_error("primitive_direction: components out of range");
    return {nx.convert_to<long long>(), ny.convert_to<long long>()};
}

inline bool is_primitive(const IntVec& v) {
    if (v.x == 0 && v.y == 0) return false;
    return std::gcd(std::abs(v.x), std::abs(v.y)) == 1;
}

inline IntVec primitive_outgoing(const TropicalCurve& curve, int vertex, EdgeId edge) {
    if (vertex < 0 || vertex >= curve.vertex_count())
        throw std::invalid_argument("primitive_outgoing: vertex out of range");
    if (edge.kind == EdgeId::Kind::unbounded) {
        if (edge.index < 0 || edge.index >= static_cast<int>(curve.unbounded.size()))
            throw std::invalid_argument("primitive_outgoing: edge out of range");
        const CurveUnboundedEdge& e = curve.unbounded[edge.index];
        if (e.vertex != vertex)
            throw std::invalid_argument("primitive_outgoing: edge not adjacent to vertex");
        return e.dir;
    }
    if (edge.index < 0 || edge.index >= static_cast<int>(curve.bounded.size()))
        throw std::invalid_argument("primitive_outgoing: edge out of range");
    const CurveBoundedEdge& e = curve.bounded[edge.index];
    if (e.v1 != vertex && e.v2 != vertex)
        throw std::invalid_argument("primitive_outgoing: edge not adjacent to vertex");
    const int other = e.v1 == vertex ? e.v2 : e.v1;
    return primitive_direction(curve.vertices[other].x - curve.vertices[vertex].x,
                               curve.vertices[other].y - curve.vertices[vertex].y);
}

namespace detail {

struct Incidence {
    EdgeId edge;
    IntVec outgoing;
    int weight = 0;
};

inline std::vector<std::vector<Incidence>> incidences(const TropicalCurve& curve) {
    std::vector<std::vector<Incidence>> table(curve.vertex_count());
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i) {
        const CurveBoundedEdge& e = curve.bounded[i];
        const EdgeId id{EdgeId::Kind::bounded, i};
        table[e.v1].push_back({id, primitive_outgoing(curve, e.v1, id), e.weight});
        table[e.v2].push_back({id, primitive_outgoing(curve, e.v2, id), e.weight});
    }
    for (int i = 0; i < static_cast<int>(curve.unbounded.size()); ++i) {
        const CurveUnboundedEdge& e = curve.unbounded[i];
        table[e.vertex].push_back({{EdgeId::Kind::unbounded, i}, e.dir, e.weight});
    }
    return table;
}

// Parametric form of an edge: origin + t * dir with t in [0, 1] for
// bounded edges and t in [0, inf) for rays.
struct Segment {
    Rat ox, oy;
    Rat dx, dy;
    bool bounded = true;
};

inline Segment to_segment(const TropicalCurve& curve, EdgeId id) {
    Segment s;
    if (id.kind == EdgeId::Kind::bounded) {
        const CurveBoundedEdge& e = curve.bounded[id.index];
        s.ox = curve.vertices[e.v1].x;
        s.oy = curve.vertices[e.v1].y;
        s.dx = curve.vertices[e.v2].x - s.ox;
        s.dy = curve.vertices[e.v2].y - s.oy;
        s.bounded = true;
    } else {
        const CurveUnboundedEdge& e = curve.unbounded[id.index];
        s.ox = curve.vertices[e.vertex].x;
        s.oy = curve.vertices[e.vertex].y;
        s.dx = e.dir.x;
        s.dy = e.dir.y;
        s.bounded = false;
    }
    return s;
}

inline bool at_endpoint(const Segment& s, const Rat& t) {
    return t == 0 || (s.bounded && t == 1);
}

// True when the two edges meet somewhere other than a shared endpoint.
inline bool improper_intersection(const Segment& a, const Segment& b) {
    const Rat det = a.dx * b.dy - a.dy * b.dx;
    const Rat rx = b.ox - a.ox;
    const Rat ry = b.oy - a.oy;
    if (det != 0) {
        const Rat t = (rx * b.dy - ry * b.dx) / det;
        const Rat s = (rx * a.dy - ry * a.dx) / det;
        const bool on_a = t >= 0 && (!a.bounded || t <= 1);
        const bool on_b = s >= 0 && (!b.bounded || s <= 1);
        if (!on_a || !on_b) return false;
        return !(at_endpoint(a, t) && at_endpoint(b, s));
    }
    // Parallel: distinct lines never meet.
    if (rx * a.dy - ry * a.dx != 0) return false;
    // Collinear: compare parameter intervals along a's direction. For
    // parallel nonzero directions the projection step is never zero.
    const Rat len = a.dx * a.dx + a.dy * a.dy;
    const Rat t0 = (rx * a.dx + ry * a.dy) / len;
    const Rat step = (b.dx * a.dx + b.dy * a.dy) / len;

    // Interval of a-parameters covered by b; nullopt bound = infinite.
    std::optional<Rat> b_lo, b_hi;
    if (b.bounded) {
        const Rat t1 = t0 + step;
        b_lo = std::min(t0, t1);
        b_hi = std::max(t0, t1);
    } else if (step > 0) {
        b_lo = t0;
    } else {
        b_hi = t0;
    }
    std::optional<Rat> lo = Rat(0);
    std::optional<Rat> hi = a.bounded ? std::optional<Rat>(1) : std::nullopt;
    if (b_lo && (!lo || *b_lo > *lo)) lo = b_lo;
    if (b_hi && (!hi || *b_hi < *hi)) hi = b_hi;

    if (lo && hi && *lo > *hi) return false;
    if (lo && hi && *lo == *hi) {
        // Single touching point; must be an endpoint of both edges.
        const Rat s = (*lo - t0) / step;
        return !(at_endpoint(a, *lo) && at_endpoint(b, s));
    }
    return true;  // overlap along a whole interval
}

}  // namespace detail

// Structural validity plus the balancing condition: at every vertex the
// weighted primitive outgoing vectors sum to zero.
inline ValidationReport check_balancing(const TropicalCurve& curve) {
    ValidationReport report;

    {
        std::set<std::string> ids;
        for (const CurveVertex& v : curve.vertices) {
            if (v.id.empty()) report.add("vertex_ids", "empty vertex id");
            if (!ids.insert(v.id).second)
                report.add("vertex_ids", "duplicate vertex id: " + v.id);
        }
        std::set<std::pair<Rat, Rat>> coords;
        for (const CurveVertex& v : curve.vertices)
            if (!coords.insert({v.x, v.y}).second)
                report.add("vertex_coordinates",
                           "coincident vertex coordinates at " + v.id);
    }

    const int n = curve.vertex_count();
    bool shape_ok = true;
    for (const CurveBoundedEdge& e : curve.bounded) {
        if (e.v1 < 0 || e.v1 >= n || e.v2 < 0 || e.v2 >= n || e.v1 == e.v2) {
            report.add("edge_endpoints", "bounded edge with bad endpoints");
            shape_ok = false;
        }
        if (e.weight < 1)
            report.add("edge_weights", "edge weight must be >= 1");
    }
    for (const CurveUnboundedEdge& e : curve.unbounded) {
        if (e.vertex < 0 || e.vertex >= n) {
            report.add("edge_endpoints", "unbounded edge with bad vertex");
            shape_ok = false;
        }
        if (e.weight < 1)
            report.add("edge_weights", "edge weight must be >= 1");
        if (!is_primitive(e.dir)) {
            report.add("primitive_direction",
                       "unbounded direction (" + std::to_string(e.dir.x) + "," +
                           std::to_string(e.dir.y) + ") is not primitive");
            shape_ok = false;
        }
    }
    if (!shape_ok) return report;

    const auto table = detail::incidences(curve);
    for (int v = 0; v < n; ++v)
        if (table[v].size() < 3)
            report.add("vertex_valence", "vertex " + curve.vertices[v].id +
                                             " is adjacent to " +
                                             std::to_string(table[v].size()) +
                                             " edges, at least 3 required");

    {
        std::vector<EdgeId> all;
        for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i)
            all.push_back({EdgeId::Kind::bounded, i});
        for (int i = 0; i < static_cast<int>(curve.unbounded.size()); ++i)
            all.push_back({EdgeId::Kind::unbounded, i});
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                const auto sa = detail::to_segment(curve, all[i]);
                const auto sb = detail::to_segment(curve, all[j]);
                if (detail::improper_intersection(sa, sb))
                    report.add("edge_intersection",
                               "edges intersect away from a shared vertex");
            }
    }

    for (int v = 0; v < n; ++v) {
        BigInt sx = 0, sy = 0;
        for (const detail::Incidence& inc : table[v]) {
            sx += BigInt(inc.weight) * inc.outgoing.x;
            sy += BigInt(inc.weight) * inc.outgoing.y;
        }
        if (sx != 0 || sy != 0)
            report.add("balancing",
                       "weighted outgoing vectors at vertex " + curve.vertices[v].id +
                           " sum to (" + sx.str() + "," + sy.str() + ")");
    }
    return report;
}

inline void require_balanced(const TropicalCurve& curve) {
    const ValidationReport report = check_balancing(curve);
    if (!report.valid())
        throw std::invalid_argument("invalid tropical curve: " + report.summary());
}

// Common weighted number of unbounded ends in the directions (-1,0),
// (0,-1) and (1,1); any other unbounded direction means the curve has no
// degree.
inline int degree(const TropicalCurve& curve) {
    require_balanced(curve);
    long long left = 0, down = 0, diagonal = 0;
    for (const CurveUnboundedEdge& e : curve.unbounded) {
        if (e.dir == IntVec{-1, 0}) left += e.weight;
        else if (e.dir == IntVec{0, -1}) down += e.weight;
        else if (e.dir == IntVec{1, 1}) diagonal += e.weight;
        else
            throw std::domain_error(
                "curve has no degree: unbounded direction (" +
                std::to_string(e.dir.x) + "," + std::to_string(e.dir.y) +
                ") is not one of (-1,0), (0,-1), (1,1)");
    }
    if (left != down || down != diagonal)
        throw std::domain_error(
            "curve has no degree: unbounded weights differ per direction (" +
            std::to_string(left) + "," + std::to_string(down) + "," +
            std::to_string(diagonal) + ")");
    if (left < 1) throw std::domain_error("curve has no unbounded edges");
    const long long d = left;
    if (curve.vertex_count() > d * d)
        throw std::domain_error("degree-" + std::to_string(d) +
                                " curve cannot have more than " +
                                std::to_string(d * d) + " vertices");
    return static_cast<int>(d);
}

// Nodal: unbounded edges of weight 1 and every vertex trivalent, or
// quadrivalent made of two opposite pairs with matching weights.
inline bool check_nodal(const TropicalCurve& curve) {
    require_balanced(curve);
    for (const CurveUnboundedEdge& e : curve.unbounded)
        if (e.weight != 1) return false;
    for (const auto& incs : detail::incidences(curve)) {
        if (incs.size() == 3) continue;
        if (incs.size() != 4) return false;
        bool paired = false;
        for (int partner = 1; partner < 4 && !paired; ++partner) {
            const auto& a = incs[0];
            const auto& b = incs[partner];
            if (!(b.outgoing == -a.outgoing && b.weight == a.weight)) continue;
            std::vector<int> rest;
            for (int i = 1; i < 4; ++i)
                if (i != partner) rest.push_back(i);
            paired = incs[rest[0]].outgoing == -incs[rest[1]].outgoing &&
                     incs[rest[0]].weight == incs[rest[1]].weight;
        }
        if (!paired) return false;
    }
    return true;
}

namespace detail {

inline bool curve_connected(const TropicalCurve& curve) {
    const int n = curve.vertex_count();
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const CurveBoundedEdge& e : curve.bounded)
        parent[find(e.v1)] = find(e.v2);
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline void require_nodal(const TropicalCurve& curve) {
    if (!check_nodal(curve))
        throw std::domain_error("curve is not nodal");
}

}  // namespace detail

// Genus of an irreducible nodal curve: (sigma - 3d + 2) / 2 with sigma
// the number of trivalent vertices.
inline int genus(const TropicalCurve& curve) {
    require_balanced(curve);
    if (!detail::curve_connected(curve))
        throw std::domain_error("genus: curve is not connected");
    detail::require_nodal(curve);
    const int d = degree(curve);
    int trivalent = 0;
    for (const auto& incs : detail::incidences(curve))
        if (incs.size() == 3) ++trivalent;
    const int doubled = trivalent - 3 * d + 2;
    if (doubled < 0 || doubled % 2 != 0)
        throw std::domain_error("genus: vertex count does not match an "
                                "irreducible nodal curve of degree " +
                                std::to_string(d));
    const int g = doubled / 2;
    if (g > (d - 1) * (d - 2) / 2)
        throw std::domain_error("genus: value exceeds (d-1)(d-2)/2");
    return g;
}

// w(a1) w(a2) |det(v1, v2)| at a trivalent vertex; balancing makes the
// value independent of the chosen pair, which is asserted.
inline long long vertex_multiplicity(const TropicalCurve& curve, int vertex) {
    require_balanced(curve);
    if (vertex < 0 || vertex >= curve.vertex_count())
        throw std::invalid_argument("vertex_multiplicity: vertex out of range");
    const auto incs = detail::incidences(curve)[vertex];
    if (incs.size() != 3)
        throw std::invalid_argument("vertex_multiplicity: vertex is not trivalent");
    auto pair_value = [&](const detail::Incidence& a, const detail::Incidence& b) {
        const BigInt det = BigInt(a.outgoing.x) * b.outgoing.y -
                           BigInt(a.outgoing.y) * b.outgoing.x;
        return BigInt(a.weight) * b.weight * boost::multiprecision::abs(det);
    };
    const BigInt m01 = pair_value(incs[0], incs[1]);
    const BigInt m02 = pair_value(incs[0], incs[2]);
    const BigInt m12 = pair_value(incs[1], incs[2]);
    if (m01 != m02 || m01 != m12)
        throw std::logic_error("vertex_multiplicity: pair values disagree");
    if (m01 <= 0)
        throw std::logic_error("vertex_multiplicity: degenerate vertex");
    return m01.convert_to<long long>();
}

inline BigInt curve_complex_multiplicity(const TropicalCurve& curve) {
    require_balanced(curve);
    detail::require_nodal(curve);
    BigInt product = 1;
    const auto table = detail::incidences(curve);
    for (int v = 0; v < curve.vertex_count(); ++v)
        if (table[v].size() == 3) product *= vertex_multiplicity(curve, v);
    return product;
}

// 0 when the complex multiplicity is even, otherwise (-1)^o with o the
// number of trivalent vertices whose multiplicity is 3 mod 4.
inline int curve_real_multiplicity(const TropicalCurve& curve) {
    require_balanced(curve);
    detail::require_nodal(curve);
    const auto table = detail::incidences(curve);
    bool even = false;
    int odd_class = 0;
    for (int v = 0; v < curve.vertex_count(); ++v) {
        if (table[v].size() != 3) continue;
        const long long mu = vertex_multiplicity(curve, v);
        if (mu % 2 == 0) even = true;
        else if (mu % 4 == 3) ++odd_class;
    }
    if (even) return 0;
    return odd_class % 2 == 0 ? 1 : -1;
}

struct FloorComponent {
    std::vector<int> vertices;
    std::vector<int> bounded_edges;
    std::vector<int> unbounded_edges;
};

struct ElevatorComponent {
    std::vector<int> bounded_edges;
    std::vector<int> unbounded_edges;
    int weight = 0;
    bool is_bounded = true;
    int floor_low = -1;
    int floor_high = -1;
};

struct FloorDecomposition {
    std::vector<FloorComponent> floors;
    std::vector<ElevatorComponent> elevators;
    FloorDiagram induced;
};

// Removes the vertical edges of a nodal degree-d curve: the connected
// components of what remains are the floors, the vertical components the
// elevators. Produces the induced floor diagram (one vertex per floor,
// bounded edges oriented by increasing y) and validates it.
inline FloorDecomposition floor_decomposition(const TropicalCurve& curve) {
    require_balanced(curve);
    detail::require_nodal(curve);
    const int d = degree(curve);
    if (!detail::curve_connected(curve))
        throw std::domain_error("floor_decomposition: curve is not connected");

    const int n = curve.vertex_count();
    auto vertical = [](const IntVec& v) { return v.x == 0; };

    std::vector<int> bounded_dirs(curve.bounded.size(), 0);  // 1 = vertical
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i) {
        const CurveBoundedEdge& e = curve.bounded[i];
        const IntVec dir = primitive_outgoing(curve, e.v1, {EdgeId::Kind::bounded, i});
        if (vertical(dir)) {
            bounded_dirs[i] = 1;
        } else {
            if (std::abs(dir.x) != 1)
                throw std::domain_error(
                    "floor_decomposition: floor edge direction (" +
                    std::to_string(dir.x) + "," + std::to_string(dir.y) +
                    ") is not of the form (1,a)");
            if (e.weight != 1)
                throw std::domain_error(
                    "floor_decomposition: floor edge of weight " +
                    std::to_string(e.weight) + ", floors carry weight-1 edges");
        }
    }

    // Floors: union-find over endpoints of non-vertical edges.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int v) -> int {
        return parent[v] == v ? v : parent[v] = self(self, parent[v]);
    };
    std::vector<bool> on_floor(n, false);
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i)
        if (!bounded_dirs[i]) {
            parent[find(find, curve.bounded[i].v1)] = find(find, curve.bounded[i].v2);
            on_floor[curve.bounded[i].v1] = on_floor[curve.bounded[i].v2] = true;
        }
    for (const CurveUnboundedEdge& e : curve.unbounded)
        if (!vertical(e.dir)) on_floor[e.vertex] = true;

    for (int v = 0; v < n; ++v)
        if (!on_floor[v])
            throw std::domain_error("floor_decomposition: vertex " +
                                    curve.vertices[v].id +
                                    " lies on vertical edges only (elevator "
                                    "junction)");

    std::map<int, int> floor_index;  // union-find root -> floor number
    std::vector<FloorComponent> floors;
    auto floor_of = [&](int v) {
        const int root = find(find, v);
        auto it = floor_index.find(root);
        if (it != floor_index.end()) return it->second;
        const int idx = static_cast<int>(floors.size());
        floor_index.emplace(root, idx);
        floors.push_back({});
        return idx;
    };
    // Deterministic floor order: sweep vertices by (y, x).
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const CurveVertex& va = curve.vertices[a];
            const CurveVertex& vb = curve.vertices[b];
            if (va.y != vb.y) return va.y < vb.y;
            return va.x < vb.x;
        });
        for (int v : order) floors[floor_of(v)].vertices.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i)
        if (!bounded_dirs[i])
            floors[floor_of(curve.bounded[i].v1)].bounded_edges.push_back(i);
    for (int i = 0; i < static_cast<int>(curve.unbounded.size()); ++i)
        if (!vertical(curve.unbounded[i].dir))
            floors[floor_of(curve.unbounded[i].vertex)].unbounded_edges.push_back(i);

    if (static_cast<int>(floors.size()) != d)
        throw std::domain_error("floor_decomposition: expected " +
                                std::to_string(d) + " floors, found " +
                                std::to_string(floors.size()));

    for (std::size_t f = 0; f < floors.size(); ++f) {
        int left = 0, diagonal = 0;
        for (int i : floors[f].unbounded_edges) {
            if (curve.unbounded[i].dir == IntVec{-1, 0}) ++left;
            if (curve.unbounded[i].dir == IntVec{1, 1}) ++diagonal;
        }
        if (left != 1)
            throw std::domain_error("floor_decomposition: floor " +
                                    std::to_string(f + 1) + " has " +
                                    std::to_string(left) +
                                    " ends of direction (-1,0), expected exactly 1");
        if (diagonal != 1)
            throw std::domain_error("floor_decomposition: floor " +
                                    std::to_string(f + 1) + " has " +
                                    std::to_string(diagonal) +
                                    " ends of direction (1,1), expected exactly 1");
    }

    // Elevators: components of the vertical subgraph.
    std::vector<int> vparent(n);
    std::iota(vparent.begin(), vparent.end(), 0);
    auto vfind = [&](auto&& self, int v) -> int {
        return vparent[v] == v ? v : vparent[v] = self(self, vparent[v]);
    };
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i)
        if (bounded_dirs[i])
            vparent[vfind(vfind, curve.bounded[i].v1)] = vfind(vfind, curve.bounded[i].v2);

    std::map<int, ElevatorComponent> elevator_map;  // root -> component
    for (int i = 0; i < static_cast<int>(curve.bounded.size()); ++i)
        if (bounded_dirs[i])
            elevator_map[vfind(vfind, curve.bounded[i].v1)].bounded_edges.push_back(i);
    for (int i = 0; i < static_cast<int>(curve.unbounded.size()); ++i) {
        const CurveUnboundedEdge& e = curve.unbounded[i];
        if (!vertical(e.dir)) continue;
        if (e.dir == IntVec{0, 1})
            throw std::domain_error(
                "floor_decomposition: unbounded elevator points upwards");
        elevator_map[vfind(vfind, e.vertex)].unbounded_edges.push_back(i);
    }

    std::vector<ElevatorComponent> elevators;
    for (auto& [root, component] : elevator_map) {
        // Uniform weight along the component.
        int weight = -1;
        for (int i : component.bounded_edges) {
            if (weight < 0) weight = curve.bounded[i].weight;
            if (curve.bounded[i].weight != weight)
                throw std::domain_error(
                    "floor_decomposition: elevator weight is not constant");
        }
        for (int i : component.unbounded_edges) {
            if (weight < 0) weight = curve.unbounded[i].weight;
            if (curve.unbounded[i].weight != weight)
                throw std::domain_error(
                    "floor_decomposition: elevator weight is not constant");
        }
        component.weight = weight;

        // Endpoint vertices: incident to exactly one vertical edge of the
        // component; pass-through crossings are incident to two.
        std::map<int, int> incidence;
        for (int i : component.bounded_edges) {
            ++incidence[curve.bounded[i].v1];
            ++incidence[curve.bounded[i].v2];
        }
        for (int i : component.unbounded_edges) ++incidence[curve.unbounded[i].vertex];
        std::vector<int> endpoints;
        for (const auto& [v, count] : incidence) {
            if (count > 2)
                throw std::domain_error(
                    "floor_decomposition: elevator branches at vertex " +
                    curve.vertices[v].id);
            if (count == 1) endpoints.push_back(v);
        }

        if (component.unbounded_edges.size() > 1)
            throw std::domain_error(
                "floor_decomposition: elevator has several unbounded ends");
        if (component.unbounded_edges.empty()) {
            if (endpoints.size() != 2)
                throw std::domain_error(
                    "floor_decomposition: bounded elevator without two endpoints");
            int low = endpoints[0], high = endpoints[1];
            if (curve.vertices[low].y > curve.vertices[high].y) std::swap(low, high);
            component.is_bounded = true;
            component.floor_low = floor_of(low);
            component.floor_high = floor_of(high);
            if (component.floor_low == component.floor_high)
                throw std::domain_error(
                    "floor_decomposition: elevator joins a floor to itself");
        } else {
            if (endpoints.size() != 1)
                throw std::domain_error(
                    "floor_decomposition: unbounded elevator shape is not a ray");
            component.is_bounded = false;
            component.floor_high = floor_of(endpoints[0]);
        }
        elevators.push_back(std::move(component));
    }

    FloorDiagram induced;
    induced.degree = d;
    int bounded_elevators = 0;
    induced.unbounded.assign(d, 0);
    for (int f = 1; f <= d; ++f) induced.vertex_ids.push_back("f" + std::to_string(f));
    for (const ElevatorComponent& e : elevators) {
        if (e.is_bounded) {
            induced.bounded.push_back({e.floor_low, e.floor_high, e.weight});
            ++bounded_elevators;
        } else {
            ++induced.unbounded[e.floor_high];
        }
    }
    // A diagram-shaped curve has d-1+g bounded and d unbounded
    // elevators, 2d-1+g in total.
    induced.genus = bounded_elevators - (d - 1);
    if (induced.genus < 0)
        throw std::domain_error(
            "floor_decomposition: fewer than d-1 bounded elevators (expected "
            "2d-1+g in total)");
    if (const ValidationReport report = validate(induced); !report.valid())
        throw std::domain_error("floor_decomposition: induced diagram invalid: " +
                                report.summary());
    int curve_genus = -1;
    try {
        curve_genus = genus(curve);
    } catch (const std::exception& error) {
        throw std::domain_error(
            std::string("floor_decomposition: curve genus undefined: ") +
            error.what());
    }
    if (induced.genus != curve_genus)
        throw std::domain_error("floor_decomposition: induced genus " +
                                std::to_string(induced.genus) +
                                " does not match the curve genus " +
                                std::to_string(curve_genus));

    FloorDecomposition result;
    result.floors = std::move(floors);
    result.elevators = std::move(elevators);
    result.induced = std::move(induced);
    return result;
}

}  // namespace floorcount
