#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "floorcount/diagram.hpp"
#include "floorcount/poset.hpp"

namespace floorcount {

inline int element_count(const FloorDiagram& d) {
    return d.vertex_count() + static_cast<int>(d.bounded.size()) +
           std::accumulate(d.unbounded.begin(), d.unbounded.end(), 0);
}

// Partial order on all vertices and edges of a diagram. Elements are
// indexed vertices first, then bounded edges, then unbounded edges
// grouped by vertex; the order is generated by u < e < v for a bounded
// edge e = (u, v) and e < v for an unbounded edge e at v.
inline Poset element_poset(const FloorDiagram& d) {
    require_valid(d);
    const int n = element_count(d);
    if (n > Poset::max_elements)
        throw std::invalid_argument("element_poset: diagram too large");

    const int vertex_base = 0;
    const int bounded_base = d.vertex_count();
    const int unbounded_base = bounded_base + static_cast<int>(d.bounded.size());

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < d.bounded.size(); ++i) {
        const int e = bounded_base + static_cast<int>(i);
        pairs.emplace_back(vertex_base + d.bounded[i].source, e);
        pairs.emplace_back(e, vertex_base + d.bounded[i].target);
    }
    int next = unbounded_base;
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int c = 0; c < d.unbounded[v]; ++c)
            pairs.emplace_back(next++, vertex_base + v);
    return Poset(n, pairs);
}

namespace detail {

// Isomorphism-invariant vertex fingerprint: unbounded count plus sorted
// incoming and outgoing weight multisets.
inline std::vector<int> vertex_signature(const FloorDiagram& d, int v) {
    std::vector<int> in, out;
    for (const DiagramEdge& e : d.bounded) {
        if (e.target == v) in.push_back(e.weight);
        if (e.source == v) out.push_back(e.weight);
    }
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    std::vector<int> sig;
    sig.push_back(d.unbounded[v]);
    sig.push_back(-1);
    sig.insert(sig.end(), in.begin(), in.end());
    sig.push_back(-1);
    sig.insert(sig.end(), out.begin(), out.end());
    return sig;
}

using ArcTable = std::map<std::pair<int, int>, std::vector<int>>;

// Sorted weight list per ordered vertex pair.
inline ArcTable arc_table(const FloorDiagram& d) {
    ArcTable arcs;
    for (const DiagramEdge& e : d.bounded)
        arcs[{e.source, e.target}].push_back(e.weight);
    for (auto& [pair, weights] : arcs) std::sort(weights.begin(), weights.end());
    return arcs;
}

inline const std::vector<int>* arcs_between(const ArcTable& arcs, int a, int b) {
    auto it = arcs.find({a, b});
    return it == arcs.end() ? nullptr : &it->second;
}

inline bool same_arcs(const ArcTable& ta, int a1, int a2, const ArcTable& tb,
                      int b1, int b2) {
    const std::vector<int>* wa = arcs_between(ta, a1, a2);
    const std::vector<int>* wb = arcs_between(tb, b1, b2);
    if (wa == nullptr || wb == nullptr) return wa == wb;
    return *wa == *wb;
}

// Counts (or detects) vertex bijections a -> b preserving unbounded
// counts and the weighted arc structure.
inline long long count_vertex_maps(const FloorDiagram& a, const FloorDiagram& b,
                                   bool stop_at_first) {
    const int n = a.vertex_count();
    if (n != b.vertex_count()) return 0;

    std::vector<std::vector<int>> sig_a(n), sig_b(n);
    for (int v = 0; v < n; ++v) {
        sig_a[v] = vertex_signature(a, v);
        sig_b[v] = vertex_signature(b, v);
    }
    {
        auto sorted_a = sig_a, sorted_b = sig_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return 0;
    }
    const ArcTable arcs_a = arc_table(a);
    const ArcTable arcs_b = arc_table(b);

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    long long found = 0;
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) {
            ++found;
            return stop_at_first;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = same_arcs(arcs_a, v, u, arcs_b, w, image[u]) &&
                     same_arcs(arcs_a, u, v, arcs_b, image[u], w);
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

// Order of the group of self-isomorphisms acting on vertices and on the
// individual bounded and unbounded edges: vertex maps times the free
// permutations of identical parallel edges and of unbounded edges
// sharing a vertex.
inline BigInt automorphism_order(const FloorDiagram& d) {
    require_valid(d);
    BigInt order = detail::count_vertex_maps(d, d, false);
    for (int u : d.unbounded) order *= detail::factorial(u);
    std::map<std::tuple<int, int, int>, int> parallel;
    for (const DiagramEdge& e : d.bounded)
        ++parallel[{e.source, e.target, e.weight}];
    for (const auto& [key, count] : parallel) order *= detail::factorial(count);
    return order;
}

inline bool isomorphic(const FloorDiagram& a, const FloorDiagram& b) {
    require_valid(a);
    require_valid(b);
    if (a.degree != b.degree || a.genus != b.genus) return false;
    if (a.bounded.size() != b.bounded.size()) return false;
    return detail::count_vertex_maps(a, b, true) > 0;
}

// Isomorphism classes of markings: linear extensions of the element
// poset modulo automorphisms. The automorphism action on extensions is
// free, so the division is exact.
inline BigInt count_markings(const FloorDiagram& d) {
    const BigInt extensions = element_poset(d).count_linear_extensions();
    const BigInt automorphisms = automorphism_order(d);
    const auto [quotient, remainder] =
        [&] {
            BigInt q = extensions / automorphisms;
            BigInt r = extensions % automorphisms;
            return std::pair{q, r};
        }();
    if (remainder != 0)
        throw std::logic_error(
            "count_markings: automorphism order does not divide the "
            "linear-extension count");
    return quotient;
}

namespace detail {

struct CanonicalSearch {
    std::vector<int> code;   // minimal encoding
    std::vector<int> order;  // order[position] = original vertex realizing it
};

// Lexicographically minimal encoding over all vertex orderings
// compatible with the signature classes. Isomorphic diagrams have the
// same classes and hence the same minimum.
inline CanonicalSearch canonical_search(const FloorDiagram& d) {
    require_valid(d);
    const int n = d.vertex_count();

    std::vector<std::pair<std::vector<int>, int>> tagged(n);
    for (int v = 0; v < n; ++v) tagged[v] = {vertex_signature(d, v), v};
    std::sort(tagged.begin(), tagged.end());
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || tagged[i].first != tagged[i - 1].first) classes.push_back({});
        classes.back().push_back(tagged[i].second);
    }

    std::vector<int> order(n);  // order[position] = original vertex
    CanonicalSearch best;
    auto encode = [&]() {
        std::vector<int> position(n);
        for (int p = 0; p < n; ++p) position[order[p]] = p;
        std::vector<int> code;
        code.push_back(d.degree);
        code.push_back(d.genus);
        for (int p = 0; p < n; ++p) code.push_back(d.unbounded[order[p]]);
        std::vector<std::array<int, 3>> edges;
        edges.reserve(d.bounded.size());
        for (const DiagramEdge& e : d.bounded)
            edges.push_back({position[e.source], position[e.target], e.weight});
        std::sort(edges.begin(), edges.end());
        for (const auto& e : edges) {
            code.push_back(e[0]);
            code.push_back(e[1]);
            code.push_back(e[2]);
        }
        if (best.code.empty() || code < best.code) {
            best.code = std::move(code);
            best.order = order;
        }
    };

    auto sweep = [&](auto&& self, std::size_t c, int base) -> void {
        if (c == classes.size()) {
            encode();
            return;
        }
        std::vector<int> members = classes[c];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t i = 0; i < members.size(); ++i)
                order[base + static_cast<int>(i)] = members[i];
            self(self, c + 1, base + static_cast<int>(members.size()));
        } while (std::next_permutation(members.begin(), members.end()));
    };
    sweep(sweep, 0, 0);
    return best;
}

}  // namespace detail

// Deterministic byte string equal for two diagrams exactly when they
// are isomorphic.
inline std::string canonical_key(const FloorDiagram& d) {
    const std::vector<int>& code = detail::canonical_search(d).code;
    std::string key;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) key.push_back(',');
        key += std::to_string(code[i]);
    }
    return key;
}

// The same diagram relabelled into its canonical vertex order, with
// edges sorted; isomorphic inputs produce identical canonical forms.
inline FloorDiagram canonical_form(const FloorDiagram& d) {
    const detail::CanonicalSearch best = detail::canonical_search(d);
    const int n = d.vertex_count();
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) position[best.order[p]] = p;

    FloorDiagram out;
    out.degree = d.degree;
    out.genus = d.genus;
    for (int p = 1; p <= n; ++p) out.vertex_ids.push_back("v" + std::to_string(p));
    out.unbounded.resize(n);
    for (int p = 0; p < n; ++p) out.unbounded[p] = d.unbounded[best.order[p]];
    out.bounded.reserve(d.bounded.size());
    for (const DiagramEdge& e : d.bounded)
        out.bounded.push_back({position[e.source], position[e.target], e.weight});
    std::sort(out.bounded.begin(), out.bounded.end(), [](const DiagramEdge& a,
                                                         const DiagramEdge& b) {
        return std::tie(a.source, a.target, a.weight) <
               std::tie(b.source, b.target, b.weight);
    });
    return out;
}

}  // namespace floorcount
