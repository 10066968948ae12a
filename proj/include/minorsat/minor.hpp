#pragma once

// Minor containment: explicit minor models, a verifier that is independent of
// how a model was produced, the spanning-partition counting bound, and an
// exact backtracking search.
//
// The search works on one connected host component at a time and only looks
// for *spanning* models (every host vertex in some branch set). In a connected
// host any model extends to a spanning one, so nothing is lost. Branch sets are
// built one after another: a root (the smallest vertex of the set) is chosen,
// then the set grows through its frontier, each frontier vertex being either
// taken or permanently excluded. Every connected set is produced exactly once.

#include <chrono>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorsat/graph.hpp"

namespace minorsat {

inline constexpr int unassigned = -1;

/// Host vertices mapped to target vertices (branch indices) or `unassigned`.
struct MinorModel {
    Graph host;
    Graph target;
    std::vector<int> branch_of;

    /// Branch sets in target-vertex order, each sorted ascending.
    std::vector<std::vector<Vertex>> branch_sets() const {
        std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(target.order()));
        for (Vertex v = 0; v < static_cast<Vertex>(branch_of.size()); ++v) {
            int b = branch_of[static_cast<std::size_t>(v)];
            if (b >= 0 && b < target.order()) sets[static_cast<std::size_t>(b)].push_back(v);
        }
        return sets;
    }

    static MinorModel from_sets(const Graph& host, const Graph& target, const std::vector<std::vector<Vertex>>& sets) {
        MinorModel m{host, target, std::vector<int>(static_cast<std::size_t>(host.order()), unassigned)};
        for (std::size_t b = 0; b < sets.size(); ++b)
            for (Vertex v : sets[b]) {
                if (v < 0 || v >= host.order()) throw graph_error("branch vertex out of range");
                if (m.branch_of[static_cast<std::size_t>(v)] != unassigned) throw graph_error("branch sets overlap");
                m.branch_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
            }
        return m;
    }
};

enum class ModelDefect { none, size_mismatch, branch_out_of_range, empty_branch, disconnected_branch, missing_edge };

struct ModelCheck {
    ModelDefect defect = ModelDefect::none;
    int branch = -1;       // offending branch (or first endpoint of a missing target edge)
    int other_branch = -1;

    explicit operator bool() const noexcept { return defect == ModelDefect::none; }
};

inline const char* to_string(ModelDefect d) {
    switch (d) {
        case ModelDefect::none: return "ok";
        case ModelDefect::size_mismatch: return "size-mismatch";
        case ModelDefect::branch_out_of_range: return "branch-out-of-range";
        case ModelDefect::empty_branch: return "empty-branch";
        case ModelDefect::disconnected_branch: return "disconnected-branch";
        case ModelDefect::missing_edge: return "missing-edge";
    }
    return "?";
}

inline ModelCheck check_model(const MinorModel& model) {
    const Graph& g = model.host;
    const Graph& t = model.target;
    if (static_cast<int>(model.branch_of.size()) != g.order()) return {ModelDefect::size_mismatch};
    for (int b : model.branch_of)
        if (b != unassigned && (b < 0 || b >= t.order())) return {ModelDefect::branch_out_of_range, b};

    auto sets = model.branch_sets();
    for (int b = 0; b < t.order(); ++b) {
        const auto& set = sets[static_cast<std::size_t>(b)];
        if (set.empty()) return {ModelDefect::empty_branch, b};
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        std::vector<Vertex> stack{set.front()};
        seen[static_cast<std::size_t>(set.front())] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)] && model.branch_of[static_cast<std::size_t>(w)] == b) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != set.size()) return {ModelDefect::disconnected_branch, b};
    }

    std::vector<char> joined(static_cast<std::size_t>(t.order() * t.order()), 0);
    for (const auto& e : g.edges()) {
        int a = model.branch_of[static_cast<std::size_t>(e.u)], b = model.branch_of[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0 && a != b) {
            joined[static_cast<std::size_t>(a * t.order() + b)] = 1;
            joined[static_cast<std::size_t>(b * t.order() + a)] = 1;
        }
    }
    for (const auto& e : t.edges())
        if (!joined[static_cast<std::size_t>(e.u * t.order() + e.v)]) return {ModelDefect::missing_edge, e.u, e.v};
    return {};
}

inline bool verify_model(const MinorModel& model) { return static_cast<bool>(check_model(model)); }

/// True when edge counting alone rules out a minor: a connected host needs
/// (n - h) spanning-tree edges inside branch sets plus one edge per target
/// edge. Disconnected hosts are handled per component for connected targets;
/// for disconnected targets on disconnected hosts the bound stays silent.
inline bool spanning_edge_bound(const Graph& host, const Graph& target) {
    const int h = target.order();
    if (h > host.order()) return true;
    auto fires = [&](int n, int m) { return h > n || m < (n - h) + target.size(); };
    auto comps = connected_components(host);
    if (comps.size() <= 1) return fires(host.order(), host.size());
    if (connected_components(target).size() > 1) return false;
    for (const auto& c : comps) {
        if (!fires(static_cast<int>(c.size()), host.induced(c).size())) return false;
    }
    return true;
}

/// Absorbs unassigned vertices into adjacent branch sets (BFS from the
/// assigned vertices, smallest id first), producing a spanning model.
inline MinorModel extend_to_spanning(const MinorModel& model) {
    if (!verify_model(model)) throw graph_error("extend_to_spanning: model does not verify");
    MinorModel out = model;
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < out.host.order(); ++v)
        if (out.branch_of[static_cast<std::size_t>(v)] != unassigned) queue.push_back(v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        for (Vertex w : out.host.neighbors(v))
            if (out.branch_of[static_cast<std::size_t>(w)] == unassigned) {
                out.branch_of[static_cast<std::size_t>(w)] = out.branch_of[static_cast<std::size_t>(v)];
                queue.push_back(w);
            }
    }
    for (Vertex v = 0; v < out.host.order(); ++v)
        if (out.branch_of[static_cast<std::size_t>(v)] == unassigned)
            throw graph_error("extend_to_spanning: vertex " + std::to_string(v) + " cannot reach any branch set");
    return out;
}

// ---------------------------------------------------------------------------
// Search.

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { model, no_minor, budget_exhausted };

enum class NoMinorReason { none, counting_bound, too_few_vertices, exhaustive_search };

struct SearchResult {
    SearchStatus status = SearchStatus::no_minor;
    std::optional<MinorModel> model;
    NoMinorReason reason = NoMinorReason::none;
    std::uint64_t nodes = 0;
};

class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(std::uint64_t nodes)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes) {}
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

namespace detail {

struct NodeMeter {
    SearchBudget budget;
    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    struct Exhausted {};

    void tick() {
        if (++nodes > budget.max_nodes) throw Exhausted{};
        if (budget.time_limit && (nodes & 0xfff) == 0 && std::chrono::steady_clock::now() - start > *budget.time_limit)
            throw Exhausted{};
    }
};

/// Spanning-model search for `target` in the connected graph `host`.
/// `seed[v]` pins host vertex v to a target vertex (or is `unassigned`).
class SpanningSearch {
public:
    SpanningSearch(const Graph& host, const Graph& target, const std::vector<int>& seed, NodeMeter& meter)
        : g_(host), t_(target), meter_(meter), n_(host.order()), h_(target.order()) {
        if (h_ > 64) throw graph_error("minor search supports targets with at most 64 vertices");
        // Target vertices by descending degree, ties by id.
        for (int a = 0; a < h_; ++a) order_.push_back(a);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return t_.degree(a) > t_.degree(b); });
        pos_of_.assign(static_cast<std::size_t>(h_), 0);
        for (int i = 0; i < h_; ++i) pos_of_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;

        tadj_.assign(static_cast<std::size_t>(h_ * h_), 0);
        for (const auto& e : t_.edges()) {
            int a = pos_of_[static_cast<std::size_t>(e.u)], b = pos_of_[static_cast<std::size_t>(e.v)];
            tadj_[idx(a, b)] = tadj_[idx(b, a)] = 1;
        }

        seed_pos_.assign(static_cast<std::size_t>(n_), -1);
        seed_count_.assign(static_cast<std::size_t>(h_), 0);
        min_seed_.assign(static_cast<std::size_t>(h_), n_);
        bool seeded = false;
        for (Vertex v = 0; v < n_; ++v) {
            int b = seed[static_cast<std::size_t>(v)];
            if (b == unassigned) continue;
            int p = pos_of_[static_cast<std::size_t>(b)];
            seed_pos_[static_cast<std::size_t>(v)] = p;
            ++seed_count_[static_cast<std::size_t>(p)];
            min_seed_[static_cast<std::size_t>(p)] = std::min(min_seed_[static_cast<std::size_t>(p)], v);
            seeded = true;
        }

        // Interchangeable target vertices (twins) get increasing roots. Seeds
        // distinguish twins, so this is disabled for seeded searches.
        twin_pred_.assign(static_cast<std::size_t>(h_), -1);
        if (!seeded)
            for (int i = 0; i < h_; ++i)
                for (int j = i - 1; j >= 0; --j)
                    if (are_twins(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)])) {
                        twin_pred_[static_cast<std::size_t>(i)] = j;
                        break;
                    }

        owner_.assign(static_cast<std::size_t>(n_), -1);
        excluded_.assign(static_cast<std::size_t>(n_), 0);
        members_.assign(static_cast<std::size_t>(h_), {});
        roots_.assign(static_cast<std::size_t>(h_), -1);
        intra_.assign(static_cast<std::size_t>(h_), 0);
        pair_.assign(static_cast<std::size_t>(h_ * h_), 0);
        slack_ = g_.size() - (n_ - h_) - t_.size();
    }

    /// Branch assignment in target-vertex ids, or nullopt if no model exists.
    std::optional<std::vector<int>> run() {
        if (h_ == 0) return std::vector<int>(static_cast<std::size_t>(n_), unassigned);
        if (h_ > n_ || slack_ < 0) return std::nullopt;
        if (!open(0)) return std::nullopt;
        std::vector<int> out(static_cast<std::size_t>(n_), unassigned);
        for (Vertex v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = order_[static_cast<std::size_t>(owner_[static_cast<std::size_t>(v)])];
        return out;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * h_ + b); }
    std::size_t at(Vertex v) const { return static_cast<std::size_t>(v); }

    bool are_twins(int a, int b) const {
        for (int c = 0; c < h_; ++c) {
            if (c == a || c == b) continue;
            if (t_.adjacent(a, c) != t_.adjacent(b, c)) return false;
        }
        return true;
    }

    void add(Vertex v, int b) {
        owner_[at(v)] = b;
        int same = 0;
        for (Vertex w : g_.neighbors(v)) {
            int o = owner_[at(w)];
            if (o == b) {
                ++same;
            } else if (o >= 0) {
                int& c = pair_[idx(b, o)];
                if (!tadj_[idx(b, o)] || c >= 1) ++waste_;
                ++c;
                pair_[idx(o, b)] = c;
            }
        }
        if (!members_[static_cast<std::size_t>(b)].empty()) waste_ += same - 1;
        intra_[static_cast<std::size_t>(b)] += same;
        members_[static_cast<std::size_t>(b)].push_back(v);
    }

    void remove(Vertex v, int b) {
        members_[static_cast<std::size_t>(b)].pop_back();
        int same = 0;
        for (Vertex w : g_.neighbors(v)) {
            int o = owner_[at(w)];
            if (o == b) {
                if (w != v) ++same;
            } else if (o >= 0) {
                int& c = pair_[idx(b, o)];
                --c;
                pair_[idx(o, b)] = c;
                if (!tadj_[idx(b, o)] || c >= 1) --waste_;
            }
        }
        if (!members_[static_cast<std::size_t>(b)].empty()) waste_ -= same - 1;
        intra_[static_cast<std::size_t>(b)] -= same;
        owner_[at(v)] = -1;
    }

    /// Lower bound (exclusive) on the root of branch k given placed roots up to position i.
    int root_floor(int k, int i) const {
        int j = twin_pred_[static_cast<std::size_t>(k)];
        while (j > i) j = twin_pred_[static_cast<std::size_t>(j)];
        return j >= 0 ? roots_[static_cast<std::size_t>(j)] : -1;
    }

    bool open(int i) {
        meter_.tick();
        int free_count = 0;
        for (Vertex v = 0; v < n_; ++v) free_count += owner_[at(v)] < 0;
        if (free_count < h_ - i) return false;
        if (i == h_ - 1) return close_last(i);

        int lo = twin_pred_[static_cast<std::size_t>(i)] >= 0 ? roots_[static_cast<std::size_t>(twin_pred_[static_cast<std::size_t>(i)])] + 1 : 0;
        int hi = std::min(n_ - 1, min_seed_[static_cast<std::size_t>(i)]);
        auto saved = excluded_;
        for (Vertex r = 0; r <= hi; ++r) {
            // Free vertices below r must still fit into some later branch.
            if (r > 0 && owner_[at(r - 1)] < 0 && !placeable_later(r - 1, i, r)) break;
            if (owner_[at(r)] >= 0 || r < lo) continue;
            int sp = seed_pos_[at(r)];
            if (sp >= 0 && sp != i) continue;

            roots_[static_cast<std::size_t>(i)] = r;
            for (Vertex u = 0; u < n_; ++u) {
                int su = seed_pos_[at(u)];
                excluded_[at(u)] = (u < r || owner_[at(u)] >= 0 || (su >= 0 && su != i)) ? 1 : 0;
            }
            add(r, i);
            bool found = grow(i);
            if (found) return true;
            remove(r, i);
        }
        roots_[static_cast<std::size_t>(i)] = -1;
        excluded_ = std::move(saved);
        return false;
    }

    bool placeable_later(Vertex u, int i, Vertex r) const {
        int su = seed_pos_[at(u)];
        if (su >= 0) return su > i && floor_with(su, i, r) < u;
        for (int k = i + 1; k < h_; ++k)
            if (floor_with(k, i, r) < u) return true;
        return false;
    }

    int floor_with(int k, int i, Vertex r) const {
        int j = twin_pred_[static_cast<std::size_t>(k)];
        while (j > i) j = twin_pred_[static_cast<std::size_t>(j)];
        if (j == i) return r;
        return j >= 0 ? roots_[static_cast<std::size_t>(j)] : -1;
    }

    bool grow(int i) {
        meter_.tick();
        if (waste_ > slack_) return false;
        if (!reachable_requirements(i)) return false;

        Vertex next = -1;
        for (Vertex v : members_[static_cast<std::size_t>(i)])
            for (Vertex w : g_.neighbors(v))
                if (owner_[at(w)] < 0 && !excluded_[at(w)] && (next < 0 || w < next)) next = w;
        if (next < 0) return close(i);

        add(next, i);
        if (grow(i)) return true;
        remove(next, i);

        excluded_[at(next)] = 1;
        if (grow(i)) return true;
        excluded_[at(next)] = 0;
        return false;
    }

    // The growing branch must still be able to reach every earlier branch it
    // needs an edge to, and all of its own seeds.
    bool reachable_requirements(int i) {
        std::uint64_t pending_seeds = 0;
        bool need_any = false;
        for (int j = 0; j < i; ++j)
            if (tadj_[idx(i, j)] && pair_[idx(i, j)] == 0) need_any = true;
        int seeds_have = 0;
        for (Vertex v : members_[static_cast<std::size_t>(i)]) seeds_have += seed_pos_[at(v)] == i;
        if (seeds_have < seed_count_[static_cast<std::size_t>(i)]) pending_seeds = 1;
        if (!need_any && !pending_seeds) return true;

        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack(members_[static_cast<std::size_t>(i)]);
        for (Vertex v : stack) seen[at(v)] = 1;
        std::vector<char> touched(static_cast<std::size_t>(h_), 0);
        int seeds_seen = seeds_have;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v)) {
                int o = owner_[at(w)];
                if (o >= 0 && o < i) touched[static_cast<std::size_t>(o)] = 1;
                if (o < 0 && !seen[at(w)] && !excluded_[at(w)]) {
                    seen[at(w)] = 1;
                    seeds_seen += seed_pos_[at(w)] == i;
                    stack.push_back(w);
                }
            }
        }
        for (int j = 0; j < i; ++j)
            if (tadj_[idx(i, j)] && !touched[static_cast<std::size_t>(j)]) return false;
        return seeds_seen >= seed_count_[static_cast<std::size_t>(i)];
    }

    bool close(int i) {
        int seeds_have = 0;
        for (Vertex v : members_[static_cast<std::size_t>(i)]) seeds_have += seed_pos_[at(v)] == i;
        if (seeds_have < seed_count_[static_cast<std::size_t>(i)]) return false;
        for (int j = 0; j < i; ++j)
            if (tadj_[idx(i, j)] && pair_[idx(i, j)] == 0) return false;
        if (!residual_feasible(i)) return false;
        return open(i + 1);
    }

    // After branches 0..i are closed, the free vertices split into components;
    // each later branch lives inside one component and every component must
    // host at least one later branch.
    bool residual_feasible(int i) const {
        const int later = h_ - 1 - i;
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        std::vector<std::uint64_t> touches;
        int ncomp = 0;
        for (Vertex s = 0; s < n_; ++s) {
            if (owner_[at(s)] >= 0 || comp[at(s)] >= 0) continue;
            std::uint64_t mask = 0;
            std::vector<Vertex> stack{s};
            comp[at(s)] = ncomp;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g_.neighbors(v)) {
                    int o = owner_[at(w)];
                    if (o >= 0) {
                        if (o < 64) mask |= std::uint64_t{1} << o;
                    } else if (comp[at(w)] < 0) {
                        comp[at(w)] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            touches.push_back(mask);
            if (++ncomp > later) return false;
        }
        if (ncomp == 0) return false;
        for (int k = i + 1; k < h_; ++k) {
            std::uint64_t need = 0;
            for (int j = 0; j <= i; ++j)
                if (tadj_[idx(k, j)] && j < 64) need |= std::uint64_t{1} << j;
            int seeded_comp = -1;
            for (Vertex v = 0; v < n_; ++v)
                if (seed_pos_[at(v)] == k) {
                    if (seeded_comp >= 0 && comp[at(v)] != seeded_comp) return false;
                    seeded_comp = comp[at(v)];
                }
            bool ok = false;
            for (int c = 0; c < ncomp && !ok; ++c)
                if ((seeded_comp < 0 || c == seeded_comp) && (touches[static_cast<std::size_t>(c)] & need) == need) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    // The last branch takes every remaining vertex.
    bool close_last(int i) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n_; ++v)
            if (owner_[at(v)] < 0) rest.push_back(v);
        if (rest.empty()) return false;
        Vertex r = rest.front();
        int lo = twin_pred_[static_cast<std::size_t>(i)] >= 0 ? roots_[static_cast<std::size_t>(twin_pred_[static_cast<std::size_t>(i)])] : -1;
        if (r <= lo) return false;
        // BFS order keeps the waste bookkeeping valid.
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> bfs{r};
        seen[at(r)] = 1;
        for (std::size_t q = 0; q < bfs.size(); ++q)
            for (Vertex w : g_.neighbors(bfs[q]))
                if (owner_[at(w)] < 0 && !seen[at(w)]) {
                    seen[at(w)] = 1;
                    bfs.push_back(w);
                }
        if (bfs.size() != rest.size()) return false;
        roots_[static_cast<std::size_t>(i)] = r;
        for (Vertex v : bfs) add(v, i);
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (tadj_[idx(i, j)] && pair_[idx(i, j)] == 0) ok = false;
        if (ok) return true;
        for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) remove(*it, i);
        roots_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Graph& g_;
    const Graph& t_;
    NodeMeter& meter_;
    int n_;
    int h_;
    int slack_ = 0;
    int waste_ = 0;
    std::vector<int> order_, pos_of_;
    std::vector<char> tadj_;
    std::vector<int> seed_pos_, seed_count_, min_seed_;
    std::vector<int> twin_pred_;
    std::vector<int> owner_;
    std::vector<char> excluded_;
    std::vector<std::vector<Vertex>> members_;
    std::vector<int> roots_, intra_, pair_;
};

/// Spanning search on the component `comp` of `host` for `target`; returns
/// host-indexed assignment on success.
inline std::optional<std::vector<int>> search_in_component(const Graph& host, const std::vector<Vertex>& comp, const Graph& target,
                                                          const std::vector<int>& seed, NodeMeter& meter) {
    Graph sub = host.induced(comp);
    std::vector<int> sub_seed(comp.size(), unassigned);
    for (std::size_t i = 0; i < comp.size(); ++i) sub_seed[i] = seed[static_cast<std::size_t>(comp[i])];
    SpanningSearch search(sub, target, sub_seed, meter);
    auto found = search.run();
    if (!found) return std::nullopt;
    std::vector<int> out(static_cast<std::size_t>(host.order()), unassigned);
    for (std::size_t i = 0; i < comp.size(); ++i) out[static_cast<std::size_t>(comp[i])] = (*found)[i];
    return out;
}

}  // namespace detail

/// Exact minor search. `seed` (optional, host-indexed) pins vertices to target
/// vertices; only completions of the seed are searched. Deterministic.
inline SearchResult find_minor(const Graph& host, const Graph& target, const SearchBudget& budget = {}, const std::vector<int>& seed = {}) {
    SearchResult result;
    std::vector<int> pins = seed.empty() ? std::vector<int>(static_cast<std::size_t>(host.order()), unassigned) : seed;
    if (static_cast<int>(pins.size()) != host.order()) throw graph_error("find_minor: seed length does not match host");
    for (int b : pins)
        if (b != unassigned && (b < 0 || b >= target.order())) throw graph_error("find_minor: seed branch out of range");

    const int h = target.order();
    if (h == 0) {
        result.status = SearchStatus::model;
        result.model = MinorModel{host, target, std::vector<int>(static_cast<std::size_t>(host.order()), unassigned)};
        return result;
    }
    if (h > host.order()) {
        result.reason = NoMinorReason::too_few_vertices;
        return result;
    }
    if (spanning_edge_bound(host, target)) {
        result.reason = NoMinorReason::counting_bound;
        return result;
    }

    detail::NodeMeter meter{budget};
    auto host_comps = connected_components(host);
    auto target_comps = connected_components(target);
    std::vector<int> comp_of(static_cast<std::size_t>(host.order()));
    for (std::size_t c = 0; c < host_comps.size(); ++c)
        for (Vertex v : host_comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    // Host component each target component is pinned to by seeds (-1: free, -2: contradictory).
    std::vector<int> pinned(target_comps.size(), -1);
    std::vector<int> tcomp_of(static_cast<std::size_t>(h));
    for (std::size_t c = 0; c < target_comps.size(); ++c)
        for (Vertex a : target_comps[c]) tcomp_of[static_cast<std::size_t>(a)] = static_cast<int>(c);
    for (Vertex v = 0; v < host.order(); ++v) {
        int b = pins[static_cast<std::size_t>(v)];
        if (b == unassigned) continue;
        int& p = pinned[static_cast<std::size_t>(tcomp_of[static_cast<std::size_t>(b)])];
        int hc = comp_of[static_cast<std::size_t>(v)];
        if (p == -1) p = hc;
        else if (p != hc) p = -2;
    }

    // Memoised search of a set of target components inside one host component.
    std::map<std::pair<int, std::vector<int>>, std::optional<std::vector<int>>> memo;
    auto solve = [&](int hc, const std::vector<int>& tcs) -> const std::optional<std::vector<int>>& {
        auto key = std::make_pair(hc, tcs);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Vertex> tverts;
        for (int tc : tcs)
            for (Vertex a : target_comps[static_cast<std::size_t>(tc)]) tverts.push_back(a);
        std::sort(tverts.begin(), tverts.end());
        Graph sub_target = target.induced(tverts);
        std::vector<int> sub_seed(static_cast<std::size_t>(host.order()), unassigned);
        std::vector<int> local(static_cast<std::size_t>(h), -1);
        for (std::size_t i = 0; i < tverts.size(); ++i) local[static_cast<std::size_t>(tverts[i])] = static_cast<int>(i);
        for (Vertex v : host_comps[static_cast<std::size_t>(hc)]) {
            int b = pins[static_cast<std::size_t>(v)];
            if (b != unassigned) sub_seed[static_cast<std::size_t>(v)] = local[static_cast<std::size_t>(b)];
        }
        auto found = detail::search_in_component(host, host_comps[static_cast<std::size_t>(hc)], sub_target, sub_seed, meter);
        if (found)
            for (auto& b : *found)
                if (b != unassigned) b = tverts[static_cast<std::size_t>(b)];
        return memo.emplace(key, std::move(found)).first->second;
    };

    std::vector<int> assign(target_comps.size(), -1);
    std::optional<std::vector<int>> witness;
    std::function<bool(std::size_t)> place = [&](std::size_t tc) -> bool {
        if (tc == target_comps.size()) {
            std::map<int, std::vector<int>> by_host;
            for (std::size_t c = 0; c < assign.size(); ++c) by_host[assign[c]].push_back(static_cast<int>(c));
            std::vector<int> combined(static_cast<std::size_t>(host.order()), unassigned);
            for (const auto& [hc, tcs] : by_host) {
                const auto& part = solve(hc, tcs);
                if (!part) return false;
                for (Vertex v : host_comps[static_cast<std::size_t>(hc)]) combined[static_cast<std::size_t>(v)] = (*part)[static_cast<std::size_t>(v)];
            }
            witness = std::move(combined);
            return true;
        }
        if (pinned[tc] == -2) return false;
        for (std::size_t hc = 0; hc < host_comps.size(); ++hc) {
            if (pinned[tc] >= 0 && pinned[tc] != static_cast<int>(hc)) continue;
            std::size_t load = target_comps[tc].size();
            for (std::size_t c = 0; c < tc; ++c)
                if (assign[c] == static_cast<int>(hc)) load += target_comps[c].size();
            if (load > host_comps[hc].size()) continue;
            assign[tc] = static_cast<int>(hc);
            if (place(tc + 1)) return true;
        }
        assign[tc] = -1;
        return false;
    };

    try {
        bool found = place(0);
        result.nodes = meter.nodes;
        if (found) {
            result.status = SearchStatus::model;
            result.model = MinorModel{host, target, std::move(*witness)};
        } else {
            result.reason = NoMinorReason::exhaustive_search;
        }
    } catch (const detail::NodeMeter::Exhausted&) {
        result.status = SearchStatus::budget_exhausted;
        result.nodes = meter.nodes;
    }
    return result;
}

/// Boolean wrapper; budget exhaustion is an error, never an answer.
inline bool has_minor(const Graph& host, const Graph& target, const SearchBudget& budget = {}) {
    auto r = find_minor(host, target, budget);
    if (r.status == SearchStatus::budget_exhausted) throw budget_exhausted(r.nodes);
    return r.status == SearchStatus::model;
}

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::model: return "Model";
        case SearchStatus::no_minor: return "NoMinor";
        case SearchStatus::budget_exhausted: return "BudgetExhausted";
    }
    return "?";
}

inline const char* to_string(NoMinorReason r) {
    switch (r) {
        case NoMinorReason::none: return "none";
        case NoMinorReason::counting_bound: return "counting bound";
        case NoMinorReason::too_few_vertices: return "too few vertices";
        case NoMinorReason::exhaustive_search: return "exhaustive search";
    }
    return "?";
}

/// Branch sets as "[a, b, c]" lines in branch order.
inline void write_model(std::ostream& os, const MinorModel& m) {
    auto sets = m.branch_sets();
    for (std::size_t b = 0; b < sets.size(); ++b) {
        os << "branch " << b << ": [";
        for (std::size_t i = 0; i < sets[b].size(); ++i) os << (i ? ", " : "") << sets[b][i];
        os << "]\n";
    }
}

}  // namespace minorsat
