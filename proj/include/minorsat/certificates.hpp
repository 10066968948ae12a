#pragma once

// Partition certificates for clique-minor saturation of generalized Petersen
// graphs, and a verifier that checks them without running any minor search.
//
// A certificate partitions V(G) into r connected groups such that every pair
// of groups is joined by an edge except one "missing" pair. Adding any edge
// between the two missing groups then yields a K^r minor with the groups as
// branch sets. Move rules shift one vertex between groups to derive sibling
// certificates with a different missing pair.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minorsat/graph.hpp"
#include "minorsat/minor.hpp"

namespace minorsat {

class cert_error : public graph_error {
public:
    using graph_error::graph_error;
};

using GroupPair = std::pair<int, int>;  // 0-based, first < second

inline GroupPair make_group_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

struct PartitionCert {
    std::vector<std::vector<Vertex>> groups;
    GroupPair missing{0, 1};
};

struct MoveRule {
    GPLabel vertex;
    int from = 0;
    int to = 0;
    GroupPair new_missing{0, 1};
};

inline constexpr int base_cert = -1;

struct CoverageEntry {
    Edge canonical;
    Edge instance;
    int cert = base_cert;  // base_cert or a move index
};

struct SaturationBundle {
    int n = 0;  // GP parameters
    int k = 0;
    int r = 0;  // clique order
    PartitionCert base;
    std::vector<MoveRule> moves;
    std::vector<CoverageEntry> coverage;

    Graph graph() const { return generalized_petersen(n, k); }
};

// ---------------------------------------------------------------------------
// Bundle text format.

namespace detail {

inline std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

inline int parse_group(const std::string& s, int r) {
    if (s.size() < 2 || s[0] != 'A') throw cert_error("bad group label '" + s + "'");
    int g = std::stoi(s.substr(1));
    if (g < 1 || g > r) throw cert_error("group label '" + s + "' out of range");
    return g - 1;
}

/// "x0y1" or "y6x7": two concatenated GP labels.
inline Edge parse_label_pair(const std::string& s, int n) {
    auto split = s.find_first_of("xy", 1);
    if (split == std::string::npos) throw cert_error("bad vertex pair '" + s + "'");
    Vertex a = GPLabel::parse(s.substr(0, split)).vertex(n);
    Vertex b = GPLabel::parse(s.substr(split)).vertex(n);
    if (a == b) throw cert_error("degenerate vertex pair '" + s + "'");
    return Edge(a, b);
}

}  // namespace detail

inline std::string pair_label(const Edge& e, int n) { return gp_label(e.u, n) + gp_label(e.v, n); }

inline SaturationBundle parse_bundle(std::istream& is) {
    SaturationBundle b;
    std::string section, line;
    std::map<std::string, int> meta;
    std::map<std::string, int> move_ids;
    std::vector<std::pair<int, std::string>> groups, moves, coverage, missing;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (section == "meta") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw cert_error("line " + std::to_string(lineno) + ": expected key = value");
            auto key = detail::trim(line.substr(0, eq)), val = detail::trim(line.substr(eq + 1));
            if (key == "family") {
                if (val != "GP") throw cert_error("unsupported family '" + val + "'");
            } else {
                meta[key] = std::stoi(val);
            }
        } else if (section == "groups") {
            groups.emplace_back(lineno, line);
        } else if (section == "missing") {
            missing.emplace_back(lineno, line);
        } else if (section == "moves") {
            moves.emplace_back(lineno, line);
        } else if (section == "coverage") {
            coverage.emplace_back(lineno, line);
        } else {
            throw cert_error("line " + std::to_string(lineno) + ": content outside a known section");
        }
    }
    for (const char* key : {"n", "k", "r"})
        if (!meta.count(key)) throw cert_error(std::string("missing meta key '") + key + "'");
    b.n = meta["n"];
    b.k = meta["k"];
    b.r = meta["r"];

    b.base.groups.assign(static_cast<std::size_t>(b.r), {});
    std::vector<char> seen(static_cast<std::size_t>(b.r), 0);
    for (const auto& [ln, text] : groups) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw cert_error("line " + std::to_string(ln) + ": expected 'Ai: labels'");
        int g = detail::parse_group(detail::trim(text.substr(0, colon)), b.r);
        if (seen[static_cast<std::size_t>(g)]) throw cert_error("line " + std::to_string(ln) + ": group listed twice");
        seen[static_cast<std::size_t>(g)] = 1;
        for (const auto& w : detail::words(text.substr(colon + 1)))
            b.base.groups[static_cast<std::size_t>(g)].push_back(GPLabel::parse(w).vertex(b.n));
    }
    if (missing.size() != 1) throw cert_error("[missing] must hold exactly one group pair");
    {
        auto w = detail::words(missing.front().second);
        if (w.size() != 2) throw cert_error("[missing] must name two groups");
        b.base.missing = make_group_pair(detail::parse_group(w[0], b.r), detail::parse_group(w[1], b.r));
    }
    for (const auto& [ln, text] : moves) {
        // Mi: <label> <from> -> <to> ; missing <A> <B>
        auto w = detail::words(text);
        if (w.size() != 9 || w[0].back() != ':' || w[3] != "->" || w[5] != ";" || w[6] != "missing")
            throw cert_error("line " + std::to_string(ln) + ": expected 'Mi: label Ai -> Aj ; missing Ak Al'");
        move_ids[w[0].substr(0, w[0].size() - 1)] = static_cast<int>(b.moves.size());
        b.moves.push_back({GPLabel::parse(w[1]), detail::parse_group(w[2], b.r), detail::parse_group(w[4], b.r),
                           make_group_pair(detail::parse_group(w[7], b.r), detail::parse_group(w[8], b.r))});
    }
    for (const auto& [ln, text] : coverage) {
        // canonical -> instance @ cert
        auto w = detail::words(text);
        if (w.size() != 5 || w[1] != "->" || w[3] != "@") throw cert_error("line " + std::to_string(ln) + ": expected 'canonical -> instance @ cert'");
        int cert = base_cert;
        if (w[4] != "base") {
            auto it = move_ids.find(w[4]);
            if (it == move_ids.end()) throw cert_error("line " + std::to_string(ln) + ": unknown certificate '" + w[4] + "'");
            cert = it->second;
        }
        b.coverage.push_back({detail::parse_label_pair(w[0], b.n), detail::parse_label_pair(w[2], b.n), cert});
    }
    return b;
}

inline SaturationBundle parse_bundle(const std::string& text) {
    std::istringstream is(text);
    return parse_bundle(is);
}

inline void write_bundle(std::ostream& os, const SaturationBundle& b) {
    auto group = [](int g) { return "A" + std::to_string(g + 1); };
    os << "[meta]\nfamily = GP\nn = " << b.n << "\nk = " << b.k << "\nr = " << b.r << "\n\n[groups]\n";
    for (std::size_t g = 0; g < b.base.groups.size(); ++g) {
        os << group(static_cast<int>(g)) << ':';
        for (Vertex v : b.base.groups[g]) os << ' ' << gp_label(v, b.n);
        os << '\n';
    }
    os << "\n[missing]\n" << group(b.base.missing.first) << ' ' << group(b.base.missing.second) << "\n\n[moves]\n";
    for (std::size_t i = 0; i < b.moves.size(); ++i) {
        const auto& m = b.moves[i];
        os << 'M' << i + 1 << ": " << m.vertex.str() << ' ' << group(m.from) << " -> " << group(m.to) << " ; missing "
           << group(m.new_missing.first) << ' ' << group(m.new_missing.second) << '\n';
    }
    os << "\n[coverage]\n";
    for (const auto& c : b.coverage)
        os << pair_label(c.canonical, b.n) << " -> " << pair_label(c.instance, b.n) << " @ "
           << (c.cert == base_cert ? std::string("base") : "M" + std::to_string(c.cert + 1)) << '\n';
}

// ---------------------------------------------------------------------------
// Certificate checks.

enum class CertDefect { none, bad_vertex, not_partition, disconnected_group, unexpected_missing_pair, missing_pair_joined };

inline const char* to_string(CertDefect d) {
    switch (d) {
        case CertDefect::none: return "ok";
        case CertDefect::bad_vertex: return "vertex out of range";
        case CertDefect::not_partition: return "groups do not partition the vertices";
        case CertDefect::disconnected_group: return "group is not connected";
        case CertDefect::unexpected_missing_pair: return "group pair without a cross edge";
        case CertDefect::missing_pair_joined: return "missing pair has a cross edge";
    }
    return "?";
}

struct CertCheck {
    CertDefect defect = CertDefect::none;
    int group = -1;
    int other = -1;

    explicit operator bool() const noexcept { return defect == CertDefect::none; }

    std::string describe() const {
        std::string s = to_string(defect);
        if (group >= 0) s += " (A" + std::to_string(group + 1);
        if (other >= 0) s += ", A" + std::to_string(other + 1);
        if (group >= 0) s += ")";
        return s;
    }
};

inline CertCheck verify_partition_cert(const Graph& g, const PartitionCert& cert) {
    const int r = static_cast<int>(cert.groups.size());
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int a = 0; a < r; ++a)
        for (Vertex v : cert.groups[static_cast<std::size_t>(a)]) {
            if (v < 0 || v >= g.order()) return {CertDefect::bad_vertex, a};
            if (owner[static_cast<std::size_t>(v)] >= 0) return {CertDefect::not_partition, owner[static_cast<std::size_t>(v)], a};
            owner[static_cast<std::size_t>(v)] = a;
        }
    for (Vertex v = 0; v < g.order(); ++v)
        if (owner[static_cast<std::size_t>(v)] < 0) return {CertDefect::not_partition};

    for (int a = 0; a < r; ++a) {
        const auto& grp = cert.groups[static_cast<std::size_t>(a)];
        if (grp.empty()) return {CertDefect::disconnected_group, a};
        std::vector<Vertex> stack{grp.front()};
        std::set<Vertex> seen{grp.front()};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (owner[static_cast<std::size_t>(w)] == a && seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != grp.size()) return {CertDefect::disconnected_group, a};
    }
    std::vector<char> joined(static_cast<std::size_t>(r * r), 0);
    for (const auto& e : g.edges()) {
        int a = owner[static_cast<std::size_t>(e.u)], b = owner[static_cast<std::size_t>(e.v)];
        if (a != b) joined[static_cast<std::size_t>(std::min(a, b) * r + std::max(a, b))] = 1;
    }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            bool is_missing = GroupPair{a, b} == cert.missing;
            bool j = joined[static_cast<std::size_t>(a * r + b)] != 0;
            if (is_missing && j) return {CertDefect::missing_pair_joined, a, b};
            if (!is_missing && !j) return {CertDefect::unexpected_missing_pair, a, b};
        }
    return {};
}

/// Moves one vertex between groups; the result must verify.
inline PartitionCert apply_move(const Graph& g, const PartitionCert& cert, const MoveRule& move, int gp_n) {
    const int r = static_cast<int>(cert.groups.size());
    if (move.from < 0 || move.from >= r || move.to < 0 || move.to >= r || move.from == move.to)
        throw cert_error("move " + move.vertex.str() + ": bad group indices");
    Vertex v = move.vertex.vertex(gp_n);
    PartitionCert out = cert;
    auto& from = out.groups[static_cast<std::size_t>(move.from)];
    auto it = std::find(from.begin(), from.end(), v);
    if (it == from.end())
        throw cert_error("move " + move.vertex.str() + ": vertex is not in A" + std::to_string(move.from + 1));
    from.erase(it);
    out.groups[static_cast<std::size_t>(move.to)].push_back(v);
    out.missing = move.new_missing;
    if (auto chk = verify_partition_cert(g, out); !chk)
        throw cert_error("move " + move.vertex.str() + " A" + std::to_string(move.from + 1) + " -> A" + std::to_string(move.to + 1) +
                         ": " + chk.describe());
    return out;
}

/// K^r model in G + added, with the certificate groups as branch sets.
inline MinorModel cert_to_model(const Graph& g, const PartitionCert& cert, const Edge& added) {
    if (auto chk = verify_partition_cert(g, cert); !chk) throw cert_error("certificate does not verify: " + chk.describe());
    const auto& ga = cert.groups[static_cast<std::size_t>(cert.missing.first)];
    const auto& gb = cert.groups[static_cast<std::size_t>(cert.missing.second)];
    auto in = [](const std::vector<Vertex>& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
    bool across = (in(ga, added.u) && in(gb, added.v)) || (in(ga, added.v) && in(gb, added.u));
    if (!across) throw cert_error("added edge does not join the missing pair of groups");
    Graph host = g.with_edge(added.u, added.v);
    return MinorModel::from_sets(host, complete(static_cast<int>(cert.groups.size())), cert.groups);
}

// ---------------------------------------------------------------------------
// Full verification of a bundle.

struct CertUsage {
    std::string name;  // "base", "M1", ...
    GroupPair missing;
    int covered = 0;
};

struct CertReport {
    bool ok = true;
    std::string failure;  // first failing step

    int n_vertices = 0;
    int m_edges = 0;
    int counting_bound = 0;  // (n - r) + C(r,2)
    bool minor_free_by_count = false;
    std::vector<CertUsage> certs;
    int orbits = 0;
    int covered = 0;
    std::vector<std::string> lines;  // human-readable evidence, one line per fact
};

inline std::string cert_name(int cert) { return cert == base_cert ? std::string("base") : "M" + std::to_string(cert + 1); }

/// Checks, in order: counting-bound minor-freeness, every certificate, exact
/// orbit coverage, and one certificate-derived K^r model per orbit. No minor
/// search is performed.
inline CertReport verify_saturation_by_certs(const SaturationBundle& bundle) {
    CertReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.failure = std::move(why);
        rep.lines.push_back("FAIL: " + rep.failure);
        return rep;
    };

    const Graph g = bundle.graph();
    const Graph kr = complete(bundle.r);
    const int n = bundle.n;
    rep.n_vertices = g.order();
    rep.m_edges = g.size();
    rep.counting_bound = (g.order() - bundle.r) + kr.size();

    // 1. minor-freeness
    rep.minor_free_by_count = is_connected(g) && spanning_edge_bound(g, kr);
    rep.lines.push_back("GP(" + std::to_string(n) + "," + std::to_string(bundle.k) + "): n = " + std::to_string(g.order()) +
                        ", m = " + std::to_string(g.size()));
    if (!rep.minor_free_by_count)
        return fail("counting bound does not certify K" + std::to_string(bundle.r) + "-minor-freeness");
    rep.lines.push_back("K" + std::to_string(bundle.r) + "-minor-free: counting bound " + std::to_string(g.size()) + " < " +
                        std::to_string(g.order()) + " - " + std::to_string(bundle.r) + " + " + std::to_string(kr.size()) + " = " +
                        std::to_string(rep.counting_bound));

    // 2. certificates
    if (static_cast<int>(bundle.base.groups.size()) != bundle.r) return fail("base certificate has the wrong number of groups");
    if (auto chk = verify_partition_cert(g, bundle.base); !chk) return fail("base certificate: " + chk.describe());
    std::vector<PartitionCert> certs;
    for (const auto& mv : bundle.moves) {
        try {
            certs.push_back(apply_move(g, bundle.base, mv, n));
        } catch (const cert_error& e) {
            return fail(e.what());
        }
    }
    auto cert_of = [&](int id) -> const PartitionCert& { return id == base_cert ? bundle.base : certs[static_cast<std::size_t>(id)]; };
    rep.certs.push_back({"base", bundle.base.missing, 0});
    for (std::size_t i = 0; i < certs.size(); ++i) rep.certs.push_back({cert_name(static_cast<int>(i)), certs[i].missing, 0});

    // 3. coverage equals the orbit representatives exactly
    const auto group = gp_dihedral_group(n);
    const auto reps = nonedge_orbits(g, group);
    rep.orbits = static_cast<int>(reps.size());
    std::map<Edge, int> listed;
    for (const auto& c : bundle.coverage) ++listed[c.canonical];
    for (const auto& [e, count] : listed) {
        if (count > 1) return fail("orbit " + pair_label(e, n) + " covered " + std::to_string(count) + " times");
        if (!std::binary_search(reps.begin(), reps.end(), e)) return fail(pair_label(e, n) + " is not an orbit representative");
    }
    for (const auto& e : reps)
        if (!listed.count(e)) return fail("orbit " + pair_label(e, n) + " is not covered");

    // 4. each entry: orbit equivalence and a verified model
    for (const auto& c : bundle.coverage) {
        const std::string tag = pair_label(c.canonical, n) + " ~ " + pair_label(c.instance, n) + " @ " + cert_name(c.cert);
        if (c.cert != base_cert && (c.cert < 0 || c.cert >= static_cast<int>(certs.size()))) return fail(tag + ": unknown certificate");
        if (g.adjacent(c.instance.u, c.instance.v)) return fail(tag + ": instance is already an edge");
        if (!find_mapping(c.canonical, c.instance, group)) return fail(tag + ": no dihedral symmetry maps canonical to instance");
        MinorModel model;
        try {
            model = cert_to_model(g, cert_of(c.cert), c.instance);
        } catch (const cert_error& e) {
            return fail(tag + ": " + e.what());
        }
        if (auto chk = check_model(model); !chk) return fail(tag + ": model check failed (" + to_string(chk.defect) + ")");
        ++rep.covered;
        ++rep.certs[static_cast<std::size_t>(c.cert + 1)].covered;
        rep.lines.push_back("  + " + tag + ": K" + std::to_string(bundle.r) + " model verified");
    }
    std::string split;
    for (const auto& u : rep.certs) split += (split.empty() ? "" : ", ") + u.name + " " + std::to_string(u.covered);
    rep.lines.push_back("orbits covered: " + std::to_string(rep.covered) + "/" + std::to_string(rep.orbits) + " (" + split + ")");
    return rep;
}

}  // namespace minorsat
