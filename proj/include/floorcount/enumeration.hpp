#pragma once

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "floorcount/diagram.hpp"
#include "floorcount/markings.hpp"

namespace floorcount {

// Unweighted shape of a candidate diagram: vertices carry a topological
// labelling (every bounded edge has source index < target index) and a
// count of unbounded edges.
struct DiagramSkeleton {
    int degree = 0;
    int genus = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> unbounded;
};

enum class InvariantKind { complex_curves, real_curves };
enum class CountMethod { floor_diagrams, kontsevich, closed_formula };

struct CountResult {
    int degree = 0;
    int genus = 0;
    InvariantKind kind = InvariantKind::complex_curves;
    CountMethod method = CountMethod::floor_diagrams;
    BigInt value;
};

// One isomorphism class together with its marking statistics.
struct DiagramClass {
    FloorDiagram diagram;
    std::string key;
    BigInt linear_extensions;
    BigInt automorphisms;
    BigInt markings;
    BigInt mu_complex;
    int mu_real = 0;
};

namespace detail {

inline void check_skeleton(const DiagramSkeleton& s) {
    const int d = s.degree;
    if (d < 1) throw std::invalid_argument("skeleton: degree must be >= 1");
    if (s.genus < 0) throw std::invalid_argument("skeleton: genus must be >= 0");
    if (static_cast<int>(s.unbounded.size()) != d)
        throw std::invalid_argument("skeleton: one unbounded count per vertex");
    if (std::accumulate(s.unbounded.begin(), s.unbounded.end(), 0) != d)
        throw std::invalid_argument("skeleton: unbounded counts must sum to the degree");
    for (int u : s.unbounded)
        if (u < 0) throw std::invalid_argument("skeleton: negative unbounded count");
    if (static_cast<int>(s.edges.size()) != d - 1 + s.genus)
        throw std::invalid_argument("skeleton: bounded edge count must be d-1+g");
    for (auto [a, b] : s.edges)
        if (a < 0 || b >= d || a >= b)
            throw std::invalid_argument(
                "skeleton: edges must satisfy 0 <= source < target < degree");
}

}  // namespace detail

// All weight assignments w_e >= 1 on the skeleton's bounded edges with
// divergence 1 at every vertex. Weights are resolved vertex by vertex:
// once the incoming weights of vertex k are fixed, its total outgoing
// weight is forced, and it is distributed over the outgoing edges.
// Weights within a parallel-edge class are kept non-increasing so every
// weighted diagram appears exactly once.
inline std::vector<std::vector<int>> solve_weights(const DiagramSkeleton& s) {
    detail::check_skeleton(s);
    const int d = s.degree;
    const int m = static_cast<int>(s.edges.size());

    // Outgoing edges per vertex, grouped into runs of equal target.
    std::vector<std::vector<int>> out_edges(d);
    for (int e = 0; e < m; ++e) out_edges[s.edges[e].first].push_back(e);
    for (auto& list : out_edges)
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return s.edges[a].second < s.edges[b].second;
        });

    std::vector<std::vector<int>> solutions;
    std::vector<int> weight(m, 0);
    std::vector<int> inflow(d, 0);

    auto distribute = [&](auto&& self, int vertex, std::size_t slot, int remaining,
                          auto&& next_vertex) -> void {
        const std::vector<int>& list = out_edges[vertex];
        if (slot == list.size()) {
            if (remaining == 0) next_vertex(next_vertex, vertex + 1);
            return;
        }
        const int e = list[slot];
        const int slots_left = static_cast<int>(list.size() - slot);
        // Parallel edges (same source and target) keep non-increasing weights.
        int cap = remaining - (slots_left - 1);
        if (slot > 0 && s.edges[list[slot - 1]].second == s.edges[e].second)
            cap = std::min(cap, weight[list[slot - 1]]);
        for (int w = 1; w <= cap; ++w) {
            weight[e] = w;
            inflow[s.edges[e].second] += w;
            self(self, vertex, slot + 1, remaining - w, next_vertex);
            inflow[s.edges[e].second] -= w;
        }
        weight[e] = 0;
    };

    auto visit = [&](auto&& self, int vertex) -> void {
        if (vertex == d) {
            solutions.push_back(weight);
            return;
        }
        const int outflow = inflow[vertex] + s.unbounded[vertex] - 1;
        const int out_count = static_cast<int>(out_edges[vertex].size());
        if (outflow < out_count) return;          // every edge needs weight >= 1
        if (out_count == 0 && outflow != 0) return;
        distribute(distribute, vertex, 0, outflow, self);
    };
    visit(visit, 0);
    return solutions;
}

namespace detail {

// Generates all topologically labelled skeletons for a fixed vector of
// unbounded counts. Pruning uses the weight capacity of each prefix cut:
// the total edge weight crossing the cut after vertex k equals
// prefix_u(k) - k, so at most that many edges can cross it.
template <typename Callback>
void generate_skeletons(int d, int g, const std::vector<int>& u, Callback&& emit) {
    const int m = d - 1 + g;
    std::vector<int> cap(d, 0);  // cap[k]: capacity of the cut after vertex k (0-based)
    {
        int prefix = 0;
        for (int k = 0; k < d; ++k) {
            prefix += u[k];
            cap[k] = prefix - (k + 1);
            if (k < d - 1 && cap[k] < 1) return;  // cut carries no weight
        }
        if (cap[d - 1] != 0) return;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    std::vector<int> in_deg(d, 0);
    std::vector<int> crossing(d, 0);

    auto visit = [&](auto&& self, int k) -> void {
        // In-degree of vertex k is final here; a vertex without
        // unbounded edges needs incoming weight.
        if (u[k] == 0 && in_deg[k] == 0) return;

        if (k == d - 1) {
            // Last vertex has no outgoing edges: incoming weight 1 - u.
            const bool sink_ok = (u[k] == 0 && in_deg[k] == 1) ||
                                 (u[k] == 1 && in_deg[k] == 0);
            if (!sink_ok || static_cast<int>(edges.size()) != m) return;
            // Connectivity of the underlying undirected graph.
            std::vector<int> parent(d);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            for (auto [a, b] : edges) parent[find(a)] = find(b);
            for (int v = 1; v < d; ++v)
                if (find(v) != find(0)) return;
            emit(edges);
            return;
        }

        // Choose the multiset of targets for edges leaving vertex k,
        // scanning targets in increasing order.
        auto choose = [&](auto&& chooser, int t, int out_deg) -> void {
            if (t == d) {
                if (out_deg == 0 && !((u[k] == 0 && in_deg[k] == 1) ||
                                      (u[k] == 1 && in_deg[k] == 0)))
                    return;  // an interior sink must absorb exactly its inflow
                if (crossing[k] < 1) return;
                self(self, k + 1);
                return;
            }
            chooser(chooser, t + 1, out_deg);  // zero edges towards t
            // Add 1, 2, ... edges k -> t while the cuts k..t-1 have room.
            int added = 0;
            while (static_cast<int>(edges.size()) < m) {
                bool room = true;
                for (int c = k; c < t && room; ++c) room = crossing[c] < cap[c];
                if (!room) break;
                for (int c = k; c < t; ++c) ++crossing[c];
                edges.emplace_back(k, t);
                ++in_deg[t];
                ++added;
                chooser(chooser, t + 1, out_deg + added);
            }
            for (; added > 0; --added) {
                edges.pop_back();
                --in_deg[t];
                for (int c = k; c < t; ++c) --crossing[c];
            }
        };
        choose(choose, k + 1, 0);
    };
    visit(visit, 0);
}

// Unbounded-count vectors compatible with some connected diagram: the
// cut after vertex k must carry positive weight, so prefix sums stay
// strictly ahead of the vertex count.
inline std::vector<std::vector<int>> unbounded_vectors(int d) {
    std::vector<std::vector<int>> result;
    std::vector<int> u(d, 0);
    auto rec = [&](auto&& self, int k, int prefix) -> void {
        if (k == d - 1) {
            u[k] = d - prefix;
            if (u[k] >= 0) result.push_back(u);
            return;
        }
        const int low = std::max(0, (k + 2) - prefix);  // prefix(k) >= k+2 unless last
        for (int v = low; prefix + v <= d; ++v) {
            u[k] = v;
            self(self, k + 1, prefix + v);
        }
        u[k] = 0;
    };
    if (d == 1) return {{1}};
    rec(rec, 0, 0);
    return result;
}

inline FloorDiagram assemble(int d, int g, const std::vector<int>& u,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>& weights) {
    FloorDiagram diagram;
    diagram.degree = d;
    diagram.genus = g;
    diagram.vertex_ids.reserve(d);
    for (int v = 1; v <= d; ++v) diagram.vertex_ids.push_back("v" + std::to_string(v));
    diagram.unbounded = u;
    diagram.bounded.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        diagram.bounded.push_back({edges[e].first, edges[e].second, weights[e]});
    return diagram;
}

}  // namespace detail

// Complete, pairwise non-isomorphic list of the floor diagrams of the
// given degree and genus, ordered by canonical key. Labelled candidates
// are produced per unbounded-count vector and deduplicated.
inline std::vector<DiagramClass> enumerate_diagram_classes(int degree, int genus,
                                                           int threads = 1) {
    if (degree < 1) throw std::invalid_argument("enumerate: degree must be >= 1");
    if (genus < 0) throw std::invalid_argument("enumerate: genus must be >= 0");

    const std::vector<std::vector<int>> unbounded = detail::unbounded_vectors(degree);
    using ClassMap = std::map<std::string, FloorDiagram>;

    auto scan = [&](std::size_t begin, std::size_t step, ClassMap& classes) {
        for (std::size_t i = begin; i < unbounded.size(); i += step) {
            const std::vector<int>& u = unbounded[i];
            detail::generate_skeletons(
                degree, genus, u, [&](const std::vector<std::pair<int, int>>& edges) {
                    DiagramSkeleton skeleton{degree, genus, edges, u};
                    for (const std::vector<int>& weights : solve_weights(skeleton)) {
                        // Store the canonical representative so output
                        // does not depend on discovery order.
                        FloorDiagram diagram = canonical_form(
                            detail::assemble(degree, genus, u, edges, weights));
                        std::string key = canonical_key(diagram);
                        classes.emplace(std::move(key), std::move(diagram));
                    }
                });
        }
    };

    ClassMap merged;
    const int workers = std::max(1, threads);
    if (workers == 1) {
        scan(0, 1, merged);
    } else {
        std::vector<ClassMap> partial(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    scan(t, workers, partial[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& thread : pool) thread.join();
        for (const auto& error : errors)
            if (error) std::rethrow_exception(error);
        for (auto& map : partial) merged.merge(map);
    }

    std::vector<DiagramClass> classes;
    classes.reserve(merged.size());
    for (auto& [key, diagram] : merged) {
        DiagramClass entry;
        entry.key = key;
        entry.linear_extensions = element_poset(diagram).count_linear_extensions();
        entry.automorphisms = automorphism_order(diagram);
        entry.markings = entry.linear_extensions / entry.automorphisms;
        if (entry.linear_extensions % entry.automorphisms != 0)
            throw std::logic_error("enumerate: non-exact marking division");
        entry.mu_complex = complex_multiplicity(diagram);
        entry.mu_real = entry.mu_complex % 2 == 0 ? 0 : 1;
        entry.diagram = std::move(diagram);
        classes.push_back(std::move(entry));
    }
    return classes;
}

inline std::vector<FloorDiagram> enumerate_diagrams(int degree, int genus,
                                                    int threads = 1) {
    std::vector<FloorDiagram> diagrams;
    for (auto& entry : enumerate_diagram_classes(degree, genus, threads))
        diagrams.push_back(std::move(entry.diagram));
    return diagrams;
}

struct CountTotals {
    BigInt complex_total;
    BigInt real_total;
    std::size_t diagram_classes = 0;
};

inline CountTotals aggregate_counts(int degree, int genus, int threads = 1) {
    CountTotals totals;
    for (const DiagramClass& entry : enumerate_diagram_classes(degree, genus, threads)) {
        totals.complex_total += entry.mu_complex * entry.markings;
        if (entry.mu_real != 0) totals.real_total += entry.markings;
        ++totals.diagram_classes;
    }
    return totals;
}

inline CountResult count_complex(int degree, int genus, int threads = 1) {
    return {degree, genus, InvariantKind::complex_curves, CountMethod::floor_diagrams,
            aggregate_counts(degree, genus, threads).complex_total};
}

// Sum of real multiplicities times marking counts over diagrams of the
// given genus. Only genus 0 is a named invariant; other genera are
// exposed experimentally.
inline CountResult count_real(int degree, int genus, int threads = 1) {
    return {degree, genus, InvariantKind::real_curves, CountMethod::floor_diagrams,
            aggregate_counts(degree, genus, threads).real_total};
}

inline CountResult count_real_rational(int degree, int threads = 1) {
    return count_real(degree, 0, threads);
}

// Degree-doubling family used for growth checks: the first member is the
// degree-1 diagram; each step replaces every unbounded edge by a new
// bottom floor carrying two unbounded edges.
inline FloorDiagram build_doubling_diagram(int k) {
    if (k < 1) throw std::invalid_argument("build_doubling_diagram: k must be >= 1");
    FloorDiagram diagram;
    diagram.degree = 1;
    diagram.genus = 0;
    diagram.vertex_ids = {"v1"};
    diagram.unbounded = {1};
    for (int step = 2; step <= k; ++step) {
        const int old_count = diagram.vertex_count();
        FloorDiagram next;
        next.degree = 2 * diagram.degree;
        next.genus = 0;
        // New bottom floors first, old floors shifted upwards.
        next.unbounded.assign(next.degree, 0);
        int fresh = 0;
        for (int v = 0; v < old_count; ++v)
            for (int c = 0; c < diagram.unbounded[v]; ++c) {
                next.unbounded[fresh] = 2;
                next.bounded.push_back({fresh, old_count + v, 1});
                ++fresh;
            }
        for (const DiagramEdge& e : diagram.bounded)
            next.bounded.push_back({e.source + old_count, e.target + old_count, e.weight});
        for (int v = 1; v <= next.degree; ++v)
            next.vertex_ids.push_back("v" + std::to_string(v));
        diagram = std::move(next);
    }
    require_valid(diagram);
    return diagram;
}

struct DoublingCheck {
    bool equal = false;
    BigInt direct;
    BigInt predicted;
};

// Marking count of the k-th doubling diagram, once directly and once via
// the recursion nu(k) = nu(k-1)^2 / 2 * C(3*2^(k-1) - 4, 3*2^(k-2) - 2).
inline DoublingCheck check_doubling_recursion(int k) {
    if (k < 2 || k > 4)
        throw std::invalid_argument(
            "check_doubling_recursion: k must be between 2 and 4");
    const BigInt previous = count_markings(build_doubling_diagram(k - 1));
    BigInt binom = 1;
    {
        const long long n = 3 * (1LL << (k - 1)) - 4;
        const long long r = 3 * (1LL << (k - 2)) - 2;
        for (long long i = 1; i <= r; ++i) {
            binom *= n - r + i;
            binom /= i;
        }
    }
    DoublingCheck check;
    const BigInt numerator = previous * previous * binom;
    if (numerator % 2 != 0)
        throw std::logic_error("check_doubling_recursion: odd numerator");
    check.predicted = numerator / 2;
    check.direct = count_markings(build_doubling_diagram(k));
    check.equal = check.direct == check.predicted;
    return check;
}

}  // namespace floorcount
