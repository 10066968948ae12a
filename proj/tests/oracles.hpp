#pragma once

// Brute-force reference implementations. These deliberately share no code
// with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "minorsat/graph.hpp"

namespace oracle {

using minorsat::Edge;
using minorsat::Graph;
using minorsat::Vertex;

inline bool connected_subset(const Graph& g, const std::vector<int>& label, int b) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
        if (label[static_cast<std::size_t>(v)] == b) members.push_back(v);
    if (members.empty()) return false;
    std::set<Vertex> seen{members.front()};
    std::vector<Vertex> stack{members.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < g.order(); ++w)
            if (g.adjacent(v, w) && label[static_cast<std::size_t>(w)] == b && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == members.size();
}

/// Does `label` (host vertex -> branch or -1) witness target as a minor?
inline bool is_model(const Graph& host, const Graph& target, const std::vector<int>& label) {
    for (int b = 0; b < target.order(); ++b)
        if (!connected_subset(host, label, b)) return false;
    for (Vertex a = 0; a < target.order(); ++a)
        for (Vertex c = a + 1; c < target.order(); ++c) {
            if (!target.adjacent(a, c)) continue;
            bool joined = false;
            for (Vertex u = 0; u < host.order() && !joined; ++u)
                for (Vertex v = 0; v < host.order() && !joined; ++v)
                    joined = host.adjacent(u, v) && label[static_cast<std::size_t>(u)] == a && label[static_cast<std::size_t>(v)] == c;
            if (!joined) return false;
        }
    return true;
}

/// Enumerates every map host vertex -> {unassigned, 0..h-1}.
inline bool has_minor(const Graph& host, const Graph& target) {
    const int n = host.order(), h = target.order();
    if (h == 0) return true;
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    while (true) {
        std::vector<int> counts(static_cast<std::size_t>(h), 0);
        for (int b : label)
            if (b >= 0) ++counts[static_cast<std::size_t>(b)];
        if (std::none_of(counts.begin(), counts.end(), [](int c) { return c == 0; }) && is_model(host, target, label)) return true;
        int i = 0;
        while (i < n && label[static_cast<std::size_t>(i)] == h - 1) label[static_cast<std::size_t>(i++)] = -1;
        if (i == n) return false;
        ++label[static_cast<std::size_t>(i)];
    }
}

/// Smallest number of deleted vertices that disconnects g or leaves one vertex.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int removed = __builtin_popcount(mask);
        if (removed >= best || n - removed < 2) continue;
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (!(mask >> v & 1)) keep.push_back(v);
        if (minorsat::connected_components(g.induced(keep)).size() > 1) best = removed;
    }
    return best;
}

inline bool has_triangle(const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            for (Vertex c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
    return false;
}

/// Is h a subgraph of g (injective edge-preserving map)?
inline bool is_subgraph(const Graph& h, const Graph& g) {
    std::vector<Vertex> img(static_cast<std::size_t>(h.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == h.order()) return true;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.adjacent(i, j) && !g.adjacent(v, img[static_cast<std::size_t>(j)])) ok = false;
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = 1;
            img[static_cast<std::size_t>(i)] = v;
            if (self(self, i + 1)) return true;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Orbit count of non-edges under the explicit list of permutations (assumed a group).
inline int count_nonedge_orbits(const Graph& g, const std::vector<std::vector<Vertex>>& group) {
    std::set<std::set<Edge>> orbits;
    for (const auto& e : g.non_edges()) {
        std::set<Edge> orbit;
        for (const auto& p : group) orbit.insert(Edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]));
        orbits.insert(orbit);
    }
    return static_cast<int>(orbits.size());
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) es.emplace_back(a, b);
    return Graph(n, es);
}

}  // namespace oracle
