#pragma once

// M(H)-saturation: a graph is saturated when it has no H minor but every
// added non-edge creates one.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorsat/graph.hpp"
#include "minorsat/minor.hpp"
#include "minorsat/parallel.hpp"
#include "minorsat/rational.hpp"

namespace minorsat {

enum class SaturationStatus { saturated, has_minor, missing_edge, inconclusive };

inline const char* to_string(SaturationStatus s) {
    switch (s) {
        case SaturationStatus::saturated: return "Saturated";
        case SaturationStatus::has_minor: return "HasMinor";
        case SaturationStatus::missing_edge: return "MissingEdge";
        case SaturationStatus::inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Outcome of one added-edge check.
struct EdgeCheck {
    Edge edge;
    SearchStatus status = SearchStatus::no_minor;
    std::optional<MinorModel> model;
    std::uint64_t nodes = 0;
};

struct Verdict {
    SaturationStatus status = SaturationStatus::saturated;
    std::optional<MinorModel> model;        // has_minor
    std::optional<Edge> edge;               // missing_edge, or the edge that ran out of budget
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
    /// Added-edge checks in candidate order; complete when saturated.
    std::vector<EdgeCheck> checks;
};

struct SaturationOptions {
    SearchBudget budget;
    unsigned jobs = 1;
};

namespace detail {

inline Verdict check_candidates(const Graph& g, const Graph& h, const std::vector<Edge>& candidates, const SaturationOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    auto finish = [&] {
        v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return v;
    };

    auto base = find_minor(g, h, opt.budget);
    v.nodes += base.nodes;
    if (base.status == SearchStatus::model) {
        v.status = SaturationStatus::has_minor;
        v.model = std::move(base.model);
        return finish();
    }
    if (base.status == SearchStatus::budget_exhausted) {
        v.status = SaturationStatus::inconclusive;
        return finish();
    }

    std::vector<std::optional<EdgeCheck>> results(candidates.size());
    std::mutex mu;
    std::size_t stop = first_index_where(candidates.size(), opt.jobs, [&](std::size_t i) {
        const Edge e = candidates[i];
        auto r = find_minor(g.with_edge(e.u, e.v), h, opt.budget);
        EdgeCheck c{e, r.status, std::move(r.model), r.nodes};
        bool fail = c.status != SearchStatus::model;
        std::lock_guard lock(mu);
        results[i] = std::move(c);
        return fail;
    });

    for (auto& r : results)
        if (r) v.nodes += r->nodes;
    for (std::size_t i = 0; i < std::min(stop + 1, candidates.size()); ++i)
        if (results[i]) v.checks.push_back(*results[i]);

    if (stop == candidates.size()) {
        v.status = SaturationStatus::saturated;
        return finish();
    }
    const EdgeCheck& bad = *results[stop];
    v.edge = bad.edge;
    if (bad.status == SearchStatus::budget_exhausted) {
        v.status = SaturationStatus::inconclusive;
        return finish();
    }
    // A missing edge is a negative claim resting on search completeness; re-run it.
    auto again = find_minor(g.with_edge(bad.edge.u, bad.edge.v), h, opt.budget);
    if (again.status == SearchStatus::model) throw std::logic_error("minor search is not deterministic");
    v.status = SaturationStatus::missing_edge;
    return finish();
}

}  // namespace detail

/// Checks H-minor saturation over every non-edge, in lexicographic order.
inline Verdict is_saturated(const Graph& g, const Graph& h, const SaturationOptions& opt = {}) {
    return detail::check_candidates(g, h, g.non_edges(), opt);
}

/// Same verdict as is_saturated, testing one representative per orbit of the
/// non-edges under `group` (every element must be an automorphism of g).
inline Verdict is_saturated_symmetric(const Graph& g, const Graph& h, const std::vector<VertexPermutation>& group,
                                      const SaturationOptions& opt = {}) {
    return detail::check_candidates(g, h, nonedge_orbits(g, group), opt);
}

// ---------------------------------------------------------------------------
// Exact census over labeled graphs.

struct CensusLimits {
    int max_n = 7;
    SearchBudget budget;
    unsigned jobs = 1;
    bool reverse_order = false;  // enumerate edge sets in reverse lexicographic order
    bool count_all = false;      // also count saturated labeled graphs at the minimum
};

struct CensusResult {
    int n = 0;
    Graph target;
    int sat = 0;
    Graph witness;
    std::optional<std::uint64_t> saturated_count;
};

namespace detail {

/// All m-subsets of {0..k-1} as bitmasks, in lexicographic order of the index sequences.
inline std::vector<std::uint64_t> combinations(int k, int m) {
    std::vector<std::uint64_t> out;
    if (m > k) return out;
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        out.push_back(mask);
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

/// sat(n, M(H)) by sweeping m = 0, 1, ... over all labeled n-vertex graphs.
inline CensusResult exact_sat(int n, const Graph& h, const CensusLimits& limits = {}) {
    if (n > limits.max_n) throw graph_error("exact_sat: n = " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_n));
    if (n < 1) throw graph_error("exact_sat: n must be positive");
    if (h.order() > n) throw graph_error("exact_sat: target has more vertices than n");

    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const int k = static_cast<int>(pairs.size());
    auto build = [&](std::uint64_t mask) {
        std::vector<Edge> es;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) es.push_back(pairs[static_cast<std::size_t>(i)]);
        return Graph(n, es);
    };
    SaturationOptions inner{limits.budget, 1};

    for (int m = 0; m <= k; ++m) {
        auto masks = detail::combinations(k, m);
        if (limits.reverse_order) std::reverse(masks.begin(), masks.end());
        std::vector<char> saturated(masks.size(), 0);
        auto test = [&](std::size_t i) {
            auto verdict = is_saturated(build(masks[i]), h, inner);
            if (verdict.status == SaturationStatus::inconclusive) throw budget_exhausted(verdict.nodes);
            saturated[i] = verdict.status == SaturationStatus::saturated;
            return saturated[i] != 0;
        };
        std::size_t first;
        if (limits.count_all) {
            parallel_for(masks.size(), limits.jobs, test);
            first = static_cast<std::size_t>(std::find(saturated.begin(), saturated.end(), 1) - saturated.begin());
        } else {
            first = first_index_where(masks.size(), limits.jobs, test);
        }
        if (first == masks.size()) continue;
        CensusResult r{n, h, m, build(masks[first]), std::nullopt};
        if (limits.count_all) r.saturated_count = static_cast<std::uint64_t>(std::count(saturated.begin(), saturated.end(), 1));
        return r;
    }
    // Only possible when even the empty graph contains H.
    throw graph_error("exact_sat: no M(H)-saturated graph on " + std::to_string(n) + " vertices");
}

// ---------------------------------------------------------------------------
// Necessary conditions on saturated graphs: the minimum-degree edge bounds
// and the local facts behind them.

struct InvariantCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    std::string detail;
};

struct LowerBoundReport {
    std::vector<InvariantCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }
};

namespace detail {

// The 3n/2 bound needs n >= 6 when H = K4: sat(n, M(K4)) = 2n - 3, and K4 - e
// is already saturated on four vertices. No other min-degree-3 target breaks
// it at small n.
inline bool three_halves_applies(int n, const Graph& h) {
    return min_degree(h) >= 3 && n >= 4 && !(h.order() == 4 && n < 6);
}

}  // namespace detail

/// Lower bound on the edge count of an n-vertex M(H)-saturated graph implied
/// by the minimum degree (and triangle-freeness) of H: 3n/2 or 2n, else 0.
inline Rational saturated_edge_lower_bound(int n, const Graph& h) {
    const int d = min_degree(h);
    if (d >= 4 && is_triangle_free(h) && n >= 5) return Rational(2 * n);
    if (detail::three_halves_applies(n, h)) return Rational(3 * n, 2);
    return Rational(0);
}

inline LowerBoundReport check_lower_bound_invariants(const Graph& g, const Graph& h, bool strict = false,
                                                     const SaturationOptions& opt = {}) {
    LowerBoundReport rep;
    const int n = g.order(), m = g.size(), d = min_degree(h);

    if (strict) {
        auto v = is_saturated(g, h, opt);
        rep.checks.push_back({"saturated", true, v.status == SaturationStatus::saturated, to_string(v.status)});
    }

    {
        InvariantCheck c{"edges >= 3n/2", detail::three_halves_applies(n, h), true, {}};
        c.passed = !c.applicable || 2 * m >= 3 * n;
        c.detail = std::to_string(m) + " >= " + Rational(3 * n, 2).str();
        rep.checks.push_back(c);
    }
    {
        InvariantCheck c{"edges >= 2n", d >= 4 && is_triangle_free(h) && n >= 5, true, {}};
        c.passed = !c.applicable || m >= 2 * n;
        c.detail = std::to_string(m) + " >= " + std::to_string(2 * n);
        rep.checks.push_back(c);
    }
    {
        // A degree-2 vertex in its own branch set could not realise degree >= 3,
        // so for min-degree-3 targets its two neighbours must be adjacent.
        InvariantCheck c{"degree-2 neighbours adjacent", d >= 3, true, {}};
        int deg2 = 0;
        for (Vertex v = 0; v < n; ++v) deg2 += g.degree(v) == 2;
        c.detail = std::to_string(deg2) + " degree-2 vertices";
        for (Vertex v = 0; v < n && c.applicable; ++v)
            if (g.degree(v) == 2) {
                const auto& nb = g.neighbors(v);
                if (!g.adjacent(nb[0], nb[1])) {
                    c.passed = false;
                    c.detail = "vertex " + std::to_string(v);
                    break;
                }
            }
        rep.checks.push_back(c);
    }
    {
        InvariantCheck c{"at most one isolated vertex", is_connected(h) && h.order() >= 3, true, {}};
        int isolated = 0;
        for (Vertex v = 0; v < n; ++v) isolated += g.degree(v) == 0;
        c.passed = !c.applicable || isolated <= 1;
        c.detail = std::to_string(isolated) + " isolated";
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization.

inline void write_verdict(std::ostream& os, const Verdict& v, bool verbose = false) {
    os << "status: " << to_string(v.status) << '\n';
    if (v.model) {
        os << "witness: minor model\n";
        write_model(os, *v.model);
    }
    if (v.edge) os << "witness: edge " << v.edge->u << ' ' << v.edge->v << '\n';
    os << "edges checked: " << v.checks.size() << '\n';
    os << "nodes: " << v.nodes << '\n';
    if (verbose) {
        os << "wall_ms: " << v.wall_ms << '\n';
        for (const auto& c : v.checks) {
            os << "added " << c.edge.u << ' ' << c.edge.v << ": " << to_string(c.status) << " (" << c.nodes << " nodes)\n";
            if (c.model) write_model(os, *c.model);
        }
    }
}

}  // namespace minorsat
