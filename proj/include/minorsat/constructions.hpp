#pragma once

// Saturated-graph families: clique-plus-subsets blocks and their gluings,
// star-minor-saturated graphs, and chains of blocks glued along an edge.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "minorsat/graph.hpp"
#include "minorsat/minor.hpp"
#include "minorsat/rational.hpp"

namespace minorsat {

struct Thm22Params {
    int s = 0;       // target order
    int d = 0;       // target minimum degree
    int kappa = 1;   // target vertex connectivity
    int copies = 1;

    void validate() const {
        if (d < 3 || d >= s) throw graph_error("clique-plus-subsets block needs 3 <= d < s");
        if (kappa < 1 || kappa > d) throw graph_error("clique-plus-subsets family needs 1 <= kappa <= d");
        if (copies < 1) throw graph_error("copies must be >= 1");
    }
};

struct GlueSpec {
    Graph block;
    std::vector<Vertex> shared;
    int copies = 1;
};

struct CoreBlock {
    Graph graph;
    std::vector<Vertex> omitted;  // the (d-1)-subset of the clique with no attached vertex
};

/// K^{s-1} on 0..s-2 plus one new vertex per (d-1)-subset of the clique,
/// joined to that subset, skipping the lexicographically first subset.
/// New vertices are numbered s-1, s, ... in subset order.
inline CoreBlock thm22_core(int s, int d) {
    Thm22Params{s, d, 1, 1}.validate();
    const int q = s - 1;
    std::vector<Edge> es;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) es.emplace_back(a, b);

    std::vector<int> subset(static_cast<std::size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) subset[static_cast<std::size_t>(i)] = i;
    std::vector<Vertex> omitted(subset.begin(), subset.end());
    Vertex next = q;
    bool first = true;
    const int k = d - 1;
    while (true) {
        if (!first) {
            for (int v : subset) es.emplace_back(next, v);
            ++next;
        }
        first = false;
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == q - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {Graph(next, es), omitted};
}

/// Identifies `copies` instances of the block along the shared clique. Copy 0
/// keeps the block numbering; later copies number their private vertices
/// consecutively after all earlier copies, in block order.
inline Graph glue_on_clique(const GlueSpec& spec) {
    const Graph& b = spec.block;
    if (spec.copies < 1) throw graph_error("glue_on_clique: copies must be >= 1");
    std::vector<char> is_shared(static_cast<std::size_t>(b.order()), 0);
    for (Vertex v : spec.shared) {
        if (v < 0 || v >= b.order()) throw graph_error("glue_on_clique: shared vertex out of range");
        if (is_shared[static_cast<std::size_t>(v)]) throw graph_error("glue_on_clique: repeated shared vertex");
        is_shared[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < spec.shared.size(); ++i)
        for (std::size_t j = i + 1; j < spec.shared.size(); ++j)
            if (!b.adjacent(spec.shared[i], spec.shared[j])) throw graph_error("glue_on_clique: shared vertices do not form a clique");

    const int priv = b.order() - static_cast<int>(spec.shared.size());
    std::vector<Edge> es;
    std::vector<Vertex> map(static_cast<std::size_t>(b.order()));
    for (int c = 0; c < spec.copies; ++c) {
        int offset = c == 0 ? 0 : b.order() + (c - 1) * priv;
        int rank = 0;
        for (Vertex v = 0; v < b.order(); ++v) {
            if (c == 0 || is_shared[static_cast<std::size_t>(v)]) map[static_cast<std::size_t>(v)] = v;
            else map[static_cast<std::size_t>(v)] = offset + rank++;
        }
        for (const auto& e : b.edges()) es.emplace_back(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
    return Graph(spec.copies * b.order() - (spec.copies - 1) * static_cast<int>(spec.shared.size()), es);
}

/// Copies of thm22_core(s, d) combined according to kappa: disjoint union for
/// kappa = 1, glued on clique vertices {0..kappa-2} for 2 <= kappa <= d-1,
/// glued on the omitted subset for kappa = d.
inline Graph thm22_family(const Thm22Params& p) {
    p.validate();
    auto core = thm22_core(p.s, p.d);
    if (p.kappa == 1) {
        Graph out = core.graph;
        for (int c = 1; c < p.copies; ++c) out = disjoint_union(out, core.graph);
        return out;
    }
    std::vector<Vertex> shared;
    if (p.kappa == p.d) {
        shared = core.omitted;
    } else {
        for (int v = 0; v < p.kappa - 1; ++v) shared.push_back(v);
    }
    return glue_on_clique({core.graph, shared, p.copies});
}

/// Density of a block glued along a shared clique of size k:
/// (m - C(k,2)) / (n - k) new edges per new vertex.
inline Rational block_density(const Graph& block, int shared) {
    if (shared < 0 || shared >= block.order()) throw graph_error("block_density: shared size out of range");
    return Rational(block.size() - binomial(shared, 2), block.order() - shared);
}

/// (d-1) + (C(s-1,2) + C(d,2) - (d-1)(s-1)) / (C(s-1,d-1) + (s-1) - d).
inline Rational thm22_density(int s, int d) {
    Thm22Params{s, d, 1, 1}.validate();
    Rational extra(binomial(s - 1, 2) + binomial(d, 2) - static_cast<std::int64_t>(d - 1) * (s - 1),
                   binomial(s - 1, d - 1) + (s - 1) - d);
    return Rational(d - 1) + extra;
}

/// K^r on 0..r-1 with the edge {0,1} replaced by the path 0, r, r+1, ...,
/// r+len-1, 1.
inline Graph star_saturated(int r, int path_len) {
    if (r < 3) throw graph_error("star_saturated: r must be >= 3");
    if (path_len < 1) throw graph_error("star_saturated: path needs at least one internal vertex");
    std::vector<Edge> es;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (!(a == 0 && b == 1)) es.emplace_back(a, b);
    Vertex prev = 0;
    for (int i = 0; i < path_len; ++i) {
        es.emplace_back(prev, r + i);
        prev = r + i;
    }
    es.emplace_back(prev, 1);
    return Graph(r + path_len, es);
}

// ---------------------------------------------------------------------------
// Edge-glued chains.

enum class ChainFamily { gp6, gp7, gp8, wagner };

struct ChainBlock {
    Graph block;
    std::vector<Vertex> shared;
    int r = 0;  // clique order the block is saturated for
    std::string name;
};

inline ChainBlock chain_block(ChainFamily f) {
    switch (f) {
        case ChainFamily::gp6: return {generalized_petersen(8, 3), {0, 1}, 6, "GP(8,3)"};
        case ChainFamily::gp7: return {generalized_petersen(13, 5), {0, 1}, 7, "GP(13,5)"};
        case ChainFamily::gp8: return {generalized_petersen(19, 7), {0, 1}, 8, "GP(19,7)"};
        case ChainFamily::wagner: return {wagner(), {0, 1}, 5, "wagner"};
    }
    throw graph_error("unknown chain family");
}

inline ChainFamily parse_chain_family(const std::string& s) {
    if (s == "gp6") return ChainFamily::gp6;
    if (s == "gp7") return ChainFamily::gp7;
    if (s == "gp8") return ChainFamily::gp8;
    if (s == "wagner") return ChainFamily::wagner;
    throw graph_error("unknown chain family '" + s + "' (expected gp6, gp7, gp8 or wagner)");
}

/// `copies` blocks glued along the outer edge {x0, x1} (or {0, 1} for wagner).
inline Graph block_chain(ChainFamily f, int copies) {
    auto b = chain_block(f);
    return glue_on_clique({b.block, b.shared, copies});
}

/// Certifies the chain K^r-minor-free without search. K^r is (r-1)-connected,
/// so when r - 1 exceeds the glued clique any K^r minor of the chain lives in
/// one block, and each block is ruled out by the spanning-partition count.
inline bool chain_minor_free_by_count(ChainFamily f) {
    auto b = chain_block(f);
    return b.r - 1 > static_cast<int>(b.shared.size()) && spanning_edge_bound(b.block, complete(b.r));
}

}  // namespace minorsat
