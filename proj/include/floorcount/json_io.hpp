#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "floorcount/diagram.hpp"
#include "floorcount/tropical.hpp"

namespace floorcount {

using Json = nlohmann::json;

namespace detail {

inline void expect_object(const Json& value, const char* context) {
    if (!value.is_object())
        throw std::invalid_argument(std::string(context) + ": expected a JSON object");
}

inline void reject_unknown_fields(const Json& object,
                                  std::initializer_list<const char*> known,
                                  const char* context) {
    for (const auto& [key, value] : object.items()) {
        bool recognised = false;
        for (const char* name : known)
            if (key == name) recognised = true;
        if (!recognised)
            throw std::invalid_argument(std::string(context) + ": unknown field \"" +
                                        key + "\"");
    }
}

inline const Json& field(const Json& object, const char* name, const char* context) {
    auto it = object.find(name);
    if (it == object.end())
        throw std::invalid_argument(std::string(context) + ": missing field \"" +
                                    name + "\"");
    return *it;
}

inline int int_field(const Json& object, const char* name, const char* context) {
    const Json& value = field(object, name, context);
    if (!value.is_number_integer())
        throw std::invalid_argument(std::string(context) + ": field \"" + name +
                                    "\" must be an integer");
    return value.get<int>();
}

inline std::string string_field(const Json& object, const char* name,
                                const char* context) {
    const Json& value = field(object, name, context);
    if (!value.is_string())
        throw std::invalid_argument(std::string(context) + ": field \"" + name +
                                    "\" must be a string");
    return value.get<std::string>();
}

}  // namespace detail

// Wire form: {"degree": d, "genus": g,
//             "vertices": [{"id": "...", "unbounded": n}, ...],
//             "edges": [{"source": "...", "target": "...", "weight": w}, ...]}
// Field order is insignificant; unknown fields are rejected.
inline Json diagram_to_json(const FloorDiagram& diagram) {
    Json vertices = Json::array();
    for (int v = 0; v < diagram.vertex_count(); ++v)
        vertices.push_back({{"id", diagram.vertex_ids[v]},
                            {"unbounded", diagram.unbounded[v]}});
    Json edges = Json::array();
    for (const DiagramEdge& e : diagram.bounded)
        edges.push_back({{"source", diagram.vertex_ids[e.source]},
                         {"target", diagram.vertex_ids[e.target]},
                         {"weight", e.weight}});
    return {{"degree", diagram.degree},
            {"genus", diagram.genus},
            {"vertices", vertices},
            {"edges", edges}};
}

inline FloorDiagram diagram_from_json(const Json& value) {
    detail::expect_object(value, "diagram");
    detail::reject_unknown_fields(value, {"degree", "genus", "vertices", "edges"},
                                  "diagram");
    FloorDiagram diagram;
    diagram.degree = detail::int_field(value, "degree", "diagram");
    diagram.genus = detail::int_field(value, "genus", "diagram");

    const Json& vertices = detail::field(value, "vertices", "diagram");
    if (!vertices.is_array())
        throw std::invalid_argument("diagram: field \"vertices\" must be an array");
    for (const Json& entry : vertices) {
        detail::expect_object(entry, "diagram vertex");
        detail::reject_unknown_fields(entry, {"id", "unbounded"}, "diagram vertex");
        diagram.vertex_ids.push_back(detail::string_field(entry, "id", "diagram vertex"));
        diagram.unbounded.push_back(detail::int_field(entry, "unbounded", "diagram vertex"));
    }

    const Json& edges = detail::field(value, "edges", "diagram");
    if (!edges.is_array())
        throw std::invalid_argument("diagram: field \"edges\" must be an array");
    for (const Json& entry : edges) {
        detail::expect_object(entry, "diagram edge");
        detail::reject_unknown_fields(entry, {"source", "target", "weight"},
                                      "diagram edge");
        DiagramEdge edge;
        edge.source = diagram.vertex_index(detail::string_field(entry, "source", "diagram edge"));
        edge.target = diagram.vertex_index(detail::string_field(entry, "target", "diagram edge"));
        edge.weight = detail::int_field(entry, "weight", "diagram edge");
        diagram.bounded.push_back(edge);
    }
    return diagram;
}

// Graphviz export; drawn bottom to top, weights labelled only when at
// least 2, matching the usual drawing convention.
inline std::string diagram_to_dot(const FloorDiagram& diagram,
                                  const std::string& name = "diagram",
                                  const std::string& label = "") {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=BT;\n";
    if (!label.empty()) out << "  label=\"" << label << "\";\n";
    for (int v = 0; v < diagram.vertex_count(); ++v)
        out << "  \"" << diagram.vertex_ids[v] << "\" [shape=ellipse];\n";
    int stub = 0;
    for (int v = 0; v < diagram.vertex_count(); ++v)
        for (int c = 0; c < diagram.unbounded[v]; ++c) {
            out << "  \"end" << stub << "\" [shape=point, label=\"\"];\n";
            out << "  \"end" << stub << "\" -> \"" << diagram.vertex_ids[v]
                << "\" [dir=none];\n";
            ++stub;
        }
    for (const DiagramEdge& e : diagram.bounded) {
        out << "  \"" << diagram.vertex_ids[e.source] << "\" -> \""
            << diagram.vertex_ids[e.target] << "\" [dir=none";
        if (e.weight >= 2) out << ", label=\"" << e.weight << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

// Rationals travel as "p" or "p/q" with q > 0 and gcd(p, q) = 1.
inline Rat rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        const BigInt p(text.substr(0, slash));
        const BigInt q(text.substr(slash + 1));
        if (q <= 0)
            throw std::invalid_argument("rational \"" + text +
                                        "\": denominator must be positive");
        if (boost::multiprecision::gcd(boost::multiprecision::abs(p), q) != 1)
            throw std::invalid_argument("rational \"" + text +
                                        "\": fraction is not reduced");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational \"" + text + "\": malformed number");
    }
}

inline std::string rational_to_string(const Rat& value) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

// Wire form: {"vertices": [{"id": "...", "x": "p/q", "y": "p/q"}, ...],
//             "edges": [{"kind": "bounded", "v1": "...", "v2": "...", "weight": w}
//                       | {"kind": "unbounded", "v": "...", "dir": [a, b], "weight": w}]}
inline Json curve_to_json(const TropicalCurve& curve) {
    Json vertices = Json::array();
    for (const CurveVertex& v : curve.vertices)
        vertices.push_back({{"id", v.id},
                            {"x", rational_to_string(v.x)},
                            {"y", rational_to_string(v.y)}});
    Json edges = Json::array();
    for (const CurveBoundedEdge& e : curve.bounded)
        edges.push_back({{"kind", "bounded"},
                         {"v1", curve.vertices[e.v1].id},
                         {"v2", curve.vertices[e.v2].id},
                         {"weight", e.weight}});
    for (const CurveUnboundedEdge& e : curve.unbounded)
        edges.push_back({{"kind", "unbounded"},
                         {"v", curve.vertices[e.vertex].id},
                         {"dir", {e.dir.x, e.dir.y}},
                         {"weight", e.weight}});
    return {{"vertices", vertices}, {"edges", edges}};
}

inline TropicalCurve curve_from_json(const Json& value) {
    detail::expect_object(value, "curve");
    detail::reject_unknown_fields(value, {"vertices", "edges"}, "curve");
    TropicalCurve curve;

    const Json& vertices = detail::field(value, "vertices", "curve");
    if (!vertices.is_array())
        throw std::invalid_argument("curve: field \"vertices\" must be an array");
    for (const Json& entry : vertices) {
        detail::expect_object(entry, "curve vertex");
        detail::reject_unknown_fields(entry, {"id", "x", "y"}, "curve vertex");
        CurveVertex vertex;
        vertex.id = detail::string_field(entry, "id", "curve vertex");
        vertex.x = rational_from_string(detail::string_field(entry, "x", "curve vertex"));
        vertex.y = rational_from_string(detail::string_field(entry, "y", "curve vertex"));
        curve.vertices.push_back(std::move(vertex));
    }

    const Json& edges = detail::field(value, "edges", "curve");
    if (!edges.is_array())
        throw std::invalid_argument("curve: field \"edges\" must be an array");
    for (const Json& entry : edges) {
        detail::expect_object(entry, "curve edge");
        const std::string kind = detail::string_field(entry, "kind", "curve edge");
        if (kind == "bounded") {
            detail::reject_unknown_fields(entry, {"kind", "v1", "v2", "weight"},
                                          "curve edge");
            CurveBoundedEdge edge;
            edge.v1 = curve.vertex_index(detail::string_field(entry, "v1", "curve edge"));
            edge.v2 = curve.vertex_index(detail::string_field(entry, "v2", "curve edge"));
            edge.weight = detail::int_field(entry, "weight", "curve edge");
            curve.bounded.push_back(edge);
        } else if (kind == "unbounded") {
            detail::reject_unknown_fields(entry, {"kind", "v", "dir", "weight"},
                                          "curve edge");
            CurveUnboundedEdge edge;
            edge.vertex = curve.vertex_index(detail::string_field(entry, "v", "curve edge"));
            const Json& dir = detail::field(entry, "dir", "curve edge");
            if (!dir.is_array() || dir.size() != 2 || !dir[0].is_number_integer() ||
                !dir[1].is_number_integer())
                throw std::invalid_argument(
                    "curve edge: field \"dir\" must be a pair of integers");
            edge.dir = {dir[0].get<long long>(), dir[1].get<long long>()};
            edge.weight = detail::int_field(entry, "weight", "curve edge");
            curve.unbounded.push_back(edge);
        } else {
            throw std::invalid_argument(
                "curve edge: field \"kind\" must be \"bounded\" or \"unbounded\"");
        }
    }
    return curve;
}

}  // namespace floorcount
