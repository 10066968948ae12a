#pragma once

// Simple undirected graphs, named generators, generalized Petersen graphs,
// symmetry helpers and the edge-list text format.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minorsat {

using Vertex = int;

/// Unordered vertex pair stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
/// "mutating" operations return a new value.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), mat_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw graph_error("negative vertex count");
    }

    /// Builds a graph from an edge list; duplicate pairs collapse.
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const auto& e : edges) insert(e.u, e.v);
        finalize();
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex a, Vertex b) const {
        check_vertex(a);
        check_vertex(b);
        return mat_[index(a, b)] != 0;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges sorted lexicographically, each with u < v.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = a + 1; b < n_; ++b)
                if (!mat_[index(a, b)]) out.emplace_back(a, b);
        return out;
    }

    Graph with_edge(Vertex a, Vertex b) const {
        check_pair(a, b);
        if (adjacent(a, b)) throw graph_error("edge " + std::to_string(a) + " " + std::to_string(b) + " already present");
        auto es = edges_;
        es.emplace_back(a, b);
        return Graph(n_, es);
    }

    /// Subgraph induced by `keep`, relabeled 0..|keep|-1 in the given order.
    Graph induced(const std::vector<Vertex>& keep) const {
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        std::vector<Edge> es;
        for (const auto& e : edges_) {
            int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
            if (a >= 0 && b >= 0) es.emplace_back(a, b);
        }
        return Graph(static_cast<int>(keep.size()), es);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t index(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw graph_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    void check_pair(Vertex a, Vertex b) const {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw graph_error("loop at vertex " + std::to_string(a));
    }

    void insert(Vertex a, Vertex b) {
        check_pair(a, b);
        mat_[index(a, b)] = 1;
        mat_[index(b, a)] = 1;
    }

    void finalize() {
        edges_.clear();
        for (auto& l : adj_) l.clear();
        for (Vertex a = 0; a < n_; ++a)
            for (Vertex b = 0; b < n_; ++b)
                if (mat_[index(a, b)]) {
                    adj_[static_cast<std::size_t>(a)].push_back(b);
                    if (a < b) edges_.emplace_back(a, b);
                }
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> mat_;
    std::vector<Edge> edges_;
};

inline Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph add_edge(const Graph& g, Vertex a, Vertex b) { return g.with_edge(a, b); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (const auto& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), es);
}

// ---------------------------------------------------------------------------
// Named generators. Vertex numbering:
//   complete(r)             0..r-1
//   complete_bipartite(a,b) parts {0..a-1} and {a..a+b-1}
//   star(r)                 K_{1,r}, centre 0, leaves 1..r
//   path(r)                 0-1-...-(r-1)
//   cycle(r)                0-1-...-(r-1)-0
//   wagner()                8-cycle 0..7 plus chords {i,i+4}

inline Graph complete(int r) {
    if (r < 1) throw graph_error("complete: r must be >= 1");
    std::vector<Edge> es;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) es.emplace_back(a, b);
    return Graph(r, es);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw graph_error("complete_bipartite: parts must be non-empty");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

inline Graph star(int r) {
    if (r < 1) throw graph_error("star: r must be >= 1");
    return complete_bipartite(1, r);
}

inline Graph path(int r) {
    if (r < 1) throw graph_error("path: r must be >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < r; ++i) es.emplace_back(i, i + 1);
    return Graph(r, es);
}

inline Graph cycle(int r) {
    if (r < 3) throw graph_error("cycle: r must be >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < r; ++i) es.emplace_back(i, (i + 1) % r);
    return Graph(r, es);
}

inline Graph wagner() {
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) es.emplace_back(i, i + 4);
    return Graph(8, es);
}

// ---------------------------------------------------------------------------
// Generalized Petersen graphs: x_i -> i, y_i -> n+i, all indices mod n.

struct GPLabel {
    char kind = 'x';  // 'x' outer, 'y' inner
    int index = 0;

    Vertex vertex(int n) const {
        if (index < 0 || index >= n) throw graph_error("GP label index out of range");
        return kind == 'x' ? index : n + index;
    }

    static GPLabel of(Vertex v, int n) {
        if (v < 0 || v >= 2 * n) throw graph_error("vertex outside GP graph");
        return v < n ? GPLabel{'x', v} : GPLabel{'y', v - n};
    }

    std::string str() const { return std::string(1, kind) + std::to_string(index); }

    static GPLabel parse(std::string_view s) {
        if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) throw graph_error("bad GP label '" + std::string(s) + "'");
        int idx = 0;
        for (char c : s.substr(1)) {
            if (c < '0' || c > '9') throw graph_error("bad GP label '" + std::string(s) + "'");
            idx = idx * 10 + (c - '0');
        }
        return {s[0], idx};
    }

    friend bool operator==(const GPLabel&, const GPLabel&) = default;
};

inline Graph generalized_petersen(int n, int k) {
    if (n < 3) throw graph_error("generalized_petersen: n must be >= 3");
    if (k < 1 || 2 * k >= n) throw graph_error("generalized_petersen: need 1 <= k < n/2");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(i, n + i);
        es.emplace_back(n + i, n + (i + k) % n);
    }
    return Graph(2 * n, es);
}

inline std::string gp_label(Vertex v, int n) { return GPLabel::of(v, n).str(); }

// ---------------------------------------------------------------------------
// Basic queries.

inline int min_degree(const Graph& g) {
    int best = g.order() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

/// Components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1 && g.order() > 0; }

inline bool is_triangle_free(const Graph& g) {
    for (const auto& e : g.edges())
        for (Vertex w : g.neighbors(e.u))
            if (w > e.v && g.adjacent(w, e.v)) return false;
    return true;
}

/// Connectivity of the subgraph left after deleting `removed` (a 0/1 mask).
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(removed);
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

/// Vertex connectivity by exhaustive vertex-cut search (intended for the
/// small, low-connectivity graphs used here). K^r gives r-1.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw graph_error("vertex_connectivity: need at least 2 vertices");
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int k = 0; k <= n - 2; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int p : pick) removed[static_cast<std::size_t>(p)] = 1;
            if (!connected_without(g, removed)) return k;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return n - 1;
}

// ---------------------------------------------------------------------------
// Symmetry.

using VertexPermutation = std::vector<Vertex>;

inline bool is_permutation_of(const VertexPermutation& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Vertex v : p) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline bool is_automorphism(const Graph& g, const VertexPermutation& p) {
    if (static_cast<int>(p.size()) != g.order()) throw graph_error("permutation length does not match vertex count");
    if (!is_permutation_of(p, g.order())) throw graph_error("not a bijection");
    for (const auto& e : g.edges())
        if (!g.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) return false;
    return true;  // edge counts match, so the image of E is all of E
}

inline VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
    VertexPermutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

inline Edge image(const VertexPermutation& p, const Edge& e) {
    return Edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]);
}

/// The 2n rotations and reflections of GP(n, .): rotations by s = 0..n-1,
/// then reflections i -> (s - i) mod n for s = 0..n-1.
inline std::vector<VertexPermutation> gp_dihedral_group(int n) {
    if (n < 1) throw graph_error("gp_dihedral_group: n must be >= 1");
    std::vector<VertexPermutation> group;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int s = 0; s < n; ++s) {
            VertexPermutation p(static_cast<std::size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                int j = reflect ? ((s - i) % n + n) % n : (i + s) % n;
                p[static_cast<std::size_t>(i)] = j;
                p[static_cast<std::size_t>(n + i)] = n + j;
            }
            group.push_back(std::move(p));
        }
    return group;
}

/// Closure of the orbit of `e` under the group generated by `group`.
inline std::vector<Edge> edge_orbit(const Edge& e, const std::vector<VertexPermutation>& group) {
    std::set<Edge> seen{e};
    std::vector<Edge> queue{e};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& p : group) {
            Edge f = image(p, queue[i]);
            if (seen.insert(f).second) queue.push_back(f);
        }
    return {seen.begin(), seen.end()};
}

/// One lexicographically least non-edge per orbit of the group action.
inline std::vector<Edge> nonedge_orbits(const Graph& g, const std::vector<VertexPermutation>& group) {
    for (std::size_t i = 0; i < group.size(); ++i)
        if (!is_automorphism(g, group[i])) throw graph_error("group element " + std::to_string(i) + " is not an automorphism");
    std::set<Edge> covered;
    std::vector<Edge> reps;
    for (const auto& e : g.non_edges()) {
        if (covered.count(e)) continue;
        reps.push_back(e);
        for (const auto& f : edge_orbit(e, group)) covered.insert(f);
    }
    return reps;
}

/// A group element mapping `from` onto `to`, if any.
inline std::optional<VertexPermutation> find_mapping(const Edge& from, const Edge& to, const std::vector<VertexPermutation>& group) {
    for (const auto& p : group)
        if (image(p, from) == to) return p;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v"; '#' starts a comment line.

inline void write_edge_list(std::ostream& os, const Graph& g, const std::vector<std::string>& header = {}) {
    for (const auto& h : header) os << "# " << h << '\n';
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g, const std::vector<std::string>& header = {}) {
    std::ostringstream os;
    write_edge_list(os, g, header);
    return os.str();
}

inline Graph parse_edge_list(std::istream& is) {
    std::string line;
    std::optional<std::pair<long, long>> head;
    std::vector<Edge> es;
    long lines_read = 0;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long a = 0, b = 0;
        if (!(ls >> a >> b)) throw graph_error("edge list line " + std::to_string(lineno) + ": expected two integers");
        std::string rest;
        if (ls >> rest) throw graph_error("edge list line " + std::to_string(lineno) + ": trailing data");
        if (!head) {
            if (a < 0 || b < 0) throw graph_error("edge list header must be non-negative");
            head = {a, b};
            continue;
        }
        if (a < 0 || b < 0 || a >= head->first || b >= head->first)
            throw graph_error("edge list line " + std::to_string(lineno) + ": endpoint out of range");
        if (a == b) throw graph_error("edge list line " + std::to_string(lineno) + ": loop");
        es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        ++lines_read;
    }
    if (!head) throw graph_error("edge list: missing 'n m' header");
    if (lines_read != head->second)
        throw graph_error("edge list: header announces " + std::to_string(head->second) + " edges, found " + std::to_string(lines_read));
    return Graph(static_cast<int>(head->first), es);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return parse_edge_list(is);
}

}  // namespace minorsat
