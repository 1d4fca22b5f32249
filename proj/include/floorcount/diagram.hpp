#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/validation.hpp"

namespace floorcount {

// Bounded edge of weight >= 1 oriented source -> target; endpoints are
// indices into FloorDiagram::vertex_ids.
struct DiagramEdge {
    int source = 0;
    int target = 0;
    int weight = 1;

    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

// Weighted acyclic oriented multigraph: d floors, d-1+g bounded edges,
// and d unbounded weight-1 edges, each oriented into its floor.
// unbounded[v] counts the unbounded edges attached to vertex v.
struct FloorDiagram {
    int degree = 0;
    int genus = 0;
    std::vector<std::string> vertex_ids;
    std::vector<int> unbounded;
    std::vector<DiagramEdge> bounded;

    int vertex_count() const { return static_cast<int>(vertex_ids.size()); }

    int vertex_index(std::string_view id) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (vertex_ids[i] == id) return i;
        throw std::invalid_argument("unknown vertex id: " + std::string(id));
    }
};

// Net inflow at a vertex: incoming bounded weight plus unbounded edges
// (weight 1 each, always incoming) minus outgoing bounded weight.
inline int divergence(const FloorDiagram& d, int vertex) {
    if (vertex < 0 || vertex >= d.vertex_count())
        throw std::invalid_argument("divergence: vertex index out of range");
    int flow = vertex < static_cast<int>(d.unbounded.size()) ? d.unbounded[vertex] : 0;
    for (const DiagramEdge& e : d.bounded) {
        if (e.target == vertex) flow += e.weight;
        if (e.source == vertex) flow -= e.weight;
    }
    return flow;
}

inline int divergence(const FloorDiagram& d, std::string_view vertex_id) {
    return divergence(d, d.vertex_index(vertex_id));
}

inline ValidationReport validate(const FloorDiagram& d) {
    ValidationReport report;
    const int n = d.vertex_count();

    if (d.degree < 1)
        report.add("degree_positive", "degree must be at least 1, got " +
                                          std::to_string(d.degree));
    if (d.genus < 0)
        report.add("genus_nonnegative",
                   "genus must be nonnegative, got " + std::to_string(d.genus));

    {
        std::set<std::string> seen;
        for (const auto& id : d.vertex_ids)
            if (!seen.insert(id).second)
                report.add("vertex_ids_unique", "duplicate vertex id: " + id);
    }
    if (static_cast<int>(d.unbounded.size()) != n)
        report.add("unbounded_counts_shape",
                   "one unbounded count per vertex is required");
    for (std::size_t v = 0; v < d.unbounded.size(); ++v)
        if (d.unbounded[v] < 0)
            report.add("unbounded_counts_shape",
                       "negative unbounded count at vertex " + std::to_string(v));

    if (n != d.degree)
        report.add("vertex_count", "expected " + std::to_string(d.degree) +
                                       " vertices, got " + std::to_string(n));

    const int expected_bounded = d.degree - 1 + d.genus;
    if (static_cast<int>(d.bounded.size()) != expected_bounded)
        report.add("bounded_edge_count",
                   "expected " + std::to_string(expected_bounded) +
                       " bounded edges, got " + std::to_string(d.bounded.size()));

    const int total_unbounded =
        std::accumulate(d.unbounded.begin(), d.unbounded.end(), 0);
    if (total_unbounded != d.degree)
        report.add("unbounded_edge_count",
                   "expected " + std::to_string(d.degree) +
                       " unbounded edges, got " + std::to_string(total_unbounded));

    bool endpoints_ok = true;
    for (const DiagramEdge& e : d.bounded) {
        if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n) {
            report.add("edge_endpoints", "edge endpoint out of range");
            endpoints_ok = false;
        } else if (e.source == e.target) {
            report.add("edge_endpoints", "self-loop at vertex " +
                                             std::to_string(e.source));
            endpoints_ok = false;
        }
        if (e.weight < 1)
            report.add("edge_weights", "bounded edge weight must be >= 1, got " +
                                           std::to_string(e.weight));
    }
    if (!endpoints_ok || n == 0) return report;

    // Acyclicity of the oriented bounded-edge graph (Kahn).
    {
        std::vector<int> indeg(n, 0);
        for (const DiagramEdge& e : d.bounded) ++indeg[e.target];
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int removed = 0;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            ++removed;
            for (const DiagramEdge& e : d.bounded)
                if (e.source == v && --indeg[e.target] == 0)
                    queue.push_back(e.target);
        }
        if (removed != n)
            report.add("acyclic", "oriented bounded-edge graph contains a cycle");
    }

    // Connectivity of the underlying undirected bounded-edge graph.
    {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const DiagramEdge& e : d.bounded)
            parent[find(e.source)] = find(e.target);
        for (int v = 1; v < n; ++v)
            if (find(v) != find(0)) {
                report.add("connected",
                           "underlying bounded-edge graph is disconnected");
                break;
            }
    }

    if (static_cast<int>(d.unbounded.size()) == n)
        for (int v = 0; v < n; ++v)
            if (const int flow = divergence(d, v); flow != 1)
                report.add("divergence", "divergence at vertex " +
                                             d.vertex_ids[v] + " is " +
                                             std::to_string(flow) +
                                             ", expected 1");
    return report;
}

inline void require_valid(const FloorDiagram& d) {
    const ValidationReport report = validate(d);
    if (!report.valid())
        throw std::invalid_argument("invalid floor diagram: " + report.summary());
}

// Product of squared edge weights; unbounded edges have weight 1.
inline BigInt complex_multiplicity(const FloorDiagram& d) {
    require_valid(d);
    BigInt product = 1;
    for (const DiagramEdge& e : d.bounded) product *= BigInt(e.weight) * e.weight;
    return product;
}

inline int real_multiplicity(const FloorDiagram& d) {
    return complex_multiplicity(d) % 2 == 0 ? 0 : 1;
}

}  // namespace floorcount
