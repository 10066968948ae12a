#include <gtest/gtest.h>

#include <sstream>

#include "minorsat/certificates.hpp"
#include "minorsat/paper_bundles.hpp"

using namespace minorsat;

namespace {

std::vector<int> group_sizes(const PartitionCert& c) {
    std::vector<int> out;
    for (const auto& g : c.groups) out.push_back(static_cast<int>(g.size()));
    return out;
}

std::vector<int> split_of(const CertReport& rep) {
    std::vector<int> out;
    for (const auto& u : rep.certs) out.push_back(u.covered);
    return out;
}

Edge pair(const char* a, const char* b, int n) { return Edge(GPLabel::parse(a).vertex(n), GPLabel::parse(b).vertex(n)); }

}  // namespace

TEST(Bundles, Shapes) {
    auto b6 = paper_bundle(6);
    EXPECT_EQ(b6.n, 8);
    EXPECT_EQ(b6.k, 3);
    EXPECT_EQ(group_sizes(b6.base), (std::vector<int>{3, 3, 3, 3, 2, 2}));
    EXPECT_EQ(b6.base.missing, (GroupPair{4, 5}));
    EXPECT_EQ(b6.moves.size(), 2u);
    EXPECT_EQ(b6.coverage.size(), 10u);

    auto b7 = paper_bundle(7);
    EXPECT_EQ(b7.n, 13);
    EXPECT_EQ(b7.k, 5);
    EXPECT_EQ(b7.base.groups.size(), 7u);
    EXPECT_EQ(b7.moves.size(), 3u);
    EXPECT_EQ(b7.coverage.size(), 16u);

    auto b8 = paper_bundle(8);
    EXPECT_EQ(b8.n, 19);
    EXPECT_EQ(b8.k, 7);
    EXPECT_EQ(b8.base.groups.size(), 8u);
    EXPECT_EQ(b8.moves.size(), 3u);
    EXPECT_EQ(b8.coverage.size(), 25u);

    for (int r = 6; r <= 8; ++r) {
        auto b = paper_bundle(r);
        int total = 0;
        for (const auto& g : b.base.groups) total += static_cast<int>(g.size());
        EXPECT_EQ(total, 2 * b.n);
        EXPECT_TRUE(verify_partition_cert(b.graph(), b.base));
    }
    EXPECT_THROW(paper_bundle(5), graph_error);
}

TEST(Bundles, FullVerification) {
    struct Row {
        int r;
        int orbits;
        std::vector<int> split;
        int bound;
    };
    for (const auto& row : {Row{6, 10, {4, 3, 3}, 25}, Row{7, 16, {8, 4, 2, 2}, 40}, Row{8, 25, {12, 5, 6, 2}, 58}}) {
        auto rep = verify_saturation_by_certs(paper_bundle(row.r));
        ASSERT_TRUE(rep.ok) << rep.failure;
        EXPECT_TRUE(rep.minor_free_by_count);
        EXPECT_EQ(rep.counting_bound, row.bound);
        EXPECT_EQ(rep.orbits, row.orbits);
        EXPECT_EQ(rep.covered, row.orbits);
        EXPECT_EQ(split_of(rep), row.split);
    }
    auto rep = verify_saturation_by_certs(paper_bundle(6));
    EXPECT_EQ(rep.lines.back(), "orbits covered: 10/10 (base 4, M1 3, M2 3)");
    EXPECT_EQ(rep.lines[1], "K6-minor-free: counting bound 24 < 16 - 6 + 15 = 25");
}

TEST(Certificates, PerturbedGroupFails) {
    auto b = paper_bundle(6);
    Graph g = b.graph();
    MoveRule bad{GPLabel::parse("x3"), 0, 1, b.base.missing};
    EXPECT_THROW(apply_move(g, b.base, bad, 8), cert_error);

    PartitionCert moved = b.base;
    Vertex x3 = GPLabel::parse("x3").vertex(8);
    std::erase(moved.groups[0], x3);
    moved.groups[1].push_back(x3);
    auto chk = verify_partition_cert(g, moved);
    EXPECT_FALSE(chk);
    EXPECT_FALSE(chk.describe().empty());
}

TEST(Certificates, DefectKinds) {
    Graph g = generalized_petersen(8, 3);
    auto base = paper_bundle(6).base;

    PartitionCert dup = base;
    dup.groups[0].push_back(dup.groups[1].front());
    EXPECT_EQ(verify_partition_cert(g, dup).defect, CertDefect::not_partition);

    PartitionCert hole = base;
    hole.groups[0].pop_back();
    EXPECT_EQ(verify_partition_cert(g, hole).defect, CertDefect::not_partition);

    PartitionCert range = base;
    range.groups[0].push_back(99);
    EXPECT_EQ(verify_partition_cert(g, range).defect, CertDefect::bad_vertex);

    PartitionCert wrong_missing = base;
    wrong_missing.missing = {0, 1};
    auto chk = verify_partition_cert(g, wrong_missing);
    EXPECT_TRUE(chk.defect == CertDefect::missing_pair_joined || chk.defect == CertDefect::unexpected_missing_pair);
}

TEST(Certificates, ApplyMove) {
    auto b = paper_bundle(6);
    Graph g = b.graph();
    auto m1 = apply_move(g, b.base, b.moves[0], 8);
    EXPECT_EQ(m1.missing, (GroupPair{3, 4}));
    Vertex x0 = GPLabel::parse("x0").vertex(8);
    EXPECT_NE(std::find(m1.groups[5].begin(), m1.groups[5].end(), x0), m1.groups[5].end());
    EXPECT_EQ(std::find(m1.groups[3].begin(), m1.groups[3].end(), x0), m1.groups[3].end());
    EXPECT_TRUE(verify_partition_cert(g, m1));

    MoveRule absent{GPLabel::parse("y0"), 0, 1, {0, 1}};
    EXPECT_THROW(apply_move(g, b.base, absent, 8), cert_error);
    MoveRule same{GPLabel::parse("x3"), 0, 0, {0, 1}};
    EXPECT_THROW(apply_move(g, b.base, same, 8), cert_error);
}

TEST(Certificates, ModelsFromCertificates) {
    auto b = paper_bundle(6);
    Graph g = b.graph();
    auto model = cert_to_model(g, b.base, pair("x1", "y0", 8));
    EXPECT_TRUE(verify_model(model));
    EXPECT_EQ(model.host.size(), 25);
    EXPECT_THROW(cert_to_model(g, b.base, pair("x3", "x6", 8)), cert_error);
}

TEST(Certificates, CoverageDefectsAreCaught) {
    auto dropped = paper_bundle(6);
    dropped.coverage.pop_back();
    auto r1 = verify_saturation_by_certs(dropped);
    EXPECT_FALSE(r1.ok);
    EXPECT_NE(r1.failure.find("not covered"), std::string::npos);

    auto doubled = paper_bundle(6);
    doubled.coverage.push_back(doubled.coverage.front());
    EXPECT_FALSE(verify_saturation_by_certs(doubled).ok);

    auto wrong_cert = paper_bundle(6);
    wrong_cert.coverage[0].cert = 0;  // x1y0 does not join the M1 missing pair
    EXPECT_FALSE(verify_saturation_by_certs(wrong_cert).ok);

    auto off_orbit = paper_bundle(6);
    off_orbit.coverage[0].instance = pair("x0", "y2", 8);  // different orbit from x0y1
    auto r4 = verify_saturation_by_certs(off_orbit);
    EXPECT_FALSE(r4.ok);
    EXPECT_NE(r4.failure.find("no dihedral symmetry"), std::string::npos);

    auto is_edge = paper_bundle(6);
    is_edge.coverage[0].instance = pair("x0", "x1", 8);
    EXPECT_FALSE(verify_saturation_by_certs(is_edge).ok);

    auto wrong_graph = paper_bundle(6);
    wrong_graph.k = 1;  // GP(8,1) has the wrong edge count for the counting bound
    EXPECT_FALSE(verify_saturation_by_certs(wrong_graph).ok);
}

TEST(BundleText, RoundTrip) {
    for (int r = 6; r <= 8; ++r) {
        auto b = paper_bundle(r);
        std::ostringstream os;
        write_bundle(os, b);
        auto back = parse_bundle(os.str());
        EXPECT_EQ(back.n, b.n);
        EXPECT_EQ(back.k, b.k);
        EXPECT_EQ(back.r, b.r);
        EXPECT_EQ(back.base.groups, b.base.groups);
        EXPECT_EQ(back.base.missing, b.base.missing);
        ASSERT_EQ(back.moves.size(), b.moves.size());
        for (std::size_t i = 0; i < b.moves.size(); ++i) {
            EXPECT_EQ(back.moves[i].vertex.vertex(b.n), b.moves[i].vertex.vertex(b.n));
            EXPECT_EQ(back.moves[i].from, b.moves[i].from);
            EXPECT_EQ(back.moves[i].to, b.moves[i].to);
            EXPECT_EQ(back.moves[i].new_missing, b.moves[i].new_missing);
        }
        ASSERT_EQ(back.coverage.size(), b.coverage.size());
        for (std::size_t i = 0; i < b.coverage.size(); ++i) {
            EXPECT_EQ(back.coverage[i].canonical, b.coverage[i].canonical);
            EXPECT_EQ(back.coverage[i].instance, b.coverage[i].instance);
            EXPECT_EQ(back.coverage[i].cert, b.coverage[i].cert);
        }
    }
}

TEST(BundleText, ParseErrors) {
    const std::string text = paper_bundle_text(6);
    auto replace = [&](const std::string& from, const std::string& to) {
        std::string s = text;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_THROW(parse_bundle(replace("family = GP", "family = XX")), cert_error);
    EXPECT_THROW(parse_bundle(replace("r = 6", "")), cert_error);
    EXPECT_THROW(parse_bundle(replace("x0y1 -> x1y0 @ base", "x0y1 -> x1y0 @ M9")), cert_error);
    EXPECT_THROW(parse_bundle(replace("x0y1 -> x1y0 @ base", "x0y1 x1y0 base")), cert_error);
    EXPECT_THROW(parse_bundle(replace("A5 A6\n", "A5\n")), cert_error);
    EXPECT_THROW(parse_bundle(replace("A2: y1 y3 y6", "A1: y1 y3 y6")), cert_error);
    EXPECT_THROW(parse_bundle(replace("[groups]", "stray\n[groups]")), cert_error);
    EXPECT_THROW(parse_bundle(replace("x3 x4 x5", "x3 x4 q5")), graph_error);
}

TEST(BundleText, LabelPairs) {
    EXPECT_EQ(pair_label(pair("x0", "y2", 8), 8), "x0y2");
    EXPECT_EQ(pair_label(pair("y6", "x7", 8), 8), "x7y6");
    EXPECT_EQ(cert_name(base_cert), "base");
    EXPECT_EQ(cert_name(1), "M2");
}

TEST(Certificates, AgreeWithSearchOnEveryOrbit) {
    auto b = paper_bundle(6);
    Graph g = b.graph();
    for (const auto& c : b.coverage) {
        auto r = find_minor(g.with_edge(c.canonical.u, c.canonical.v), complete(6));
        EXPECT_EQ(r.status, SearchStatus::model) << pair_label(c.canonical, 8);
    }
}
