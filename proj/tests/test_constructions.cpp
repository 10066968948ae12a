#include <gtest/gtest.h>

#include "minorsat/constructions.hpp"
#include "minorsat/saturation.hpp"
#include "oracles.hpp"

using namespace minorsat;

namespace {

// K5 with the edge {0,1} removed.
Graph k5_minus_edge() {
    return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

std::int64_t core_order(int s, int d) { return (s - 1) + binomial(s - 1, d - 1) - 1; }
std::int64_t core_size(int s, int d) { return binomial(s - 1, 2) + (d - 1) * binomial(s - 1, d - 1) - (d - 1); }

}  // namespace

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(6, 4), Rational(3, 2));
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(8, 4).str(), "2");
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
    EXPECT_LT(Rational(23, 14), Rational(11, 6));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(18, 6), 18564);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(CliquePlusSubsets, Counts) {
    EXPECT_EQ(thm22_core(6, 3).graph.order(), 14);
    EXPECT_EQ(thm22_core(6, 3).graph.size(), 28);
    EXPECT_EQ(thm22_core(4, 3).graph.order(), 5);
    EXPECT_EQ(thm22_core(4, 3).graph.size(), 7);
    EXPECT_EQ(thm22_core(5, 4).graph.order(), 7);
    EXPECT_EQ(thm22_core(5, 4).graph.size(), 15);
    for (int s = 4; s <= 9; ++s)
        for (int d = 3; d < s; ++d) {
            auto core = thm22_core(s, d);
            EXPECT_EQ(core.graph.order(), core_order(s, d)) << s << "," << d;
            EXPECT_EQ(core.graph.size(), core_size(s, d)) << s << "," << d;
        }
}

TEST(CliquePlusSubsets, Structure) {
    for (int s = 4; s <= 8; ++s)
        for (int d = 3; d < s; ++d) {
            auto core = thm22_core(s, d);
            const Graph& g = core.graph;
            int high = 0;
            for (Vertex v = 0; v < g.order(); ++v) high += g.degree(v) >= d;
            EXPECT_EQ(high, s - 1);
            for (Vertex v = s - 1; v < g.order(); ++v) EXPECT_EQ(g.degree(v), d - 1);
            ASSERT_EQ(static_cast<int>(core.omitted.size()), d - 1);
            for (int i = 0; i < d - 1; ++i) EXPECT_EQ(core.omitted[static_cast<std::size_t>(i)], i);
        }
}

TEST(CliquePlusSubsets, RejectsBadParameters) {
    EXPECT_THROW(thm22_core(4, 4), graph_error);
    EXPECT_THROW(thm22_core(5, 2), graph_error);
    EXPECT_THROW(thm22_family({6, 3, 4, 2}), graph_error);
    EXPECT_THROW(thm22_family({6, 3, 0, 2}), graph_error);
    EXPECT_THROW(thm22_family({6, 3, 1, 0}), graph_error);
}

TEST(CliquePlusSubsets, Families) {
    Graph a = thm22_family({6, 3, 3, 2});
    EXPECT_EQ(a.order(), 26);
    EXPECT_EQ(a.size(), 55);

    Graph b = thm22_family({4, 3, 1, 3});
    EXPECT_EQ(b.order(), 15);
    EXPECT_EQ(b.size(), 21);
    EXPECT_EQ(connected_components(b).size(), 3u);

    Graph c = thm22_family({4, 3, 3, 2});
    EXPECT_EQ(c.order(), 8);
    EXPECT_EQ(c.size(), 13);

    Graph d = thm22_family({6, 4, 2, 3});  // glued on a single vertex
    EXPECT_EQ(d.order(), 3 * core_order(6, 4) - 2);
    EXPECT_EQ(d.size(), 3 * core_size(6, 4));
    EXPECT_EQ(vertex_connectivity(d), 1);
}

TEST(CliquePlusSubsets, Density) {
    EXPECT_EQ(thm22_density(6, 3), Rational(9, 4));
    for (int s = 4; s <= 9; ++s)
        for (int d = 3; d < s; ++d) {
            Rational rho = thm22_density(s, d);
            EXPECT_LE(rho, Rational(d)) << s << "," << d;
            // Closed form against the count of edges and vertices added per glued copy.
            Rational per_copy(core_size(s, d) - binomial(d - 1, 2), core_order(s, d) - (d - 1));
            EXPECT_EQ(rho, per_copy) << s << "," << d;
            EXPECT_EQ(rho, block_density(thm22_core(s, d).graph, d - 1));
        }
}

TEST(CliquePlusSubsets, GluedGrowthMatchesDensity) {
    // Each further copy glued on the omitted set adds exactly the block density per new vertex.
    for (int copies = 1; copies <= 4; ++copies) {
        Graph g = thm22_family({6, 3, 3, copies});
        Graph next = thm22_family({6, 3, 3, copies + 1});
        EXPECT_EQ(Rational(next.size() - g.size(), next.order() - g.order()), Rational(9, 4));
    }
}

TEST(CliquePlusSubsets, SaturatedAtDeskScale) {
    EXPECT_EQ(is_saturated(thm22_core(4, 3).graph, complete(4)).status, SaturationStatus::saturated);
    EXPECT_EQ(is_saturated(thm22_core(5, 4).graph, complete(5)).status, SaturationStatus::saturated);
    EXPECT_EQ(is_saturated(thm22_core(5, 3).graph, k5_minus_edge()).status, SaturationStatus::saturated);
    EXPECT_FALSE(has_minor(thm22_core(5, 3).graph, complete(5)));
    EXPECT_EQ(is_saturated(thm22_family({4, 3, 3, 3}), complete(4)).status, SaturationStatus::saturated);
    EXPECT_EQ(is_saturated(thm22_family({4, 3, 1, 2}), complete(4)).status, SaturationStatus::missing_edge);
}

TEST(CliquePlusSubsets, CoreIsSaturatedByOracle) {
    EXPECT_FALSE(oracle::has_minor(thm22_core(4, 3).graph, complete(4)));
    for (const auto& e : thm22_core(4, 3).graph.non_edges())
        EXPECT_TRUE(oracle::has_minor(add_edge(thm22_core(4, 3).graph, e.u, e.v), complete(4)));
}

TEST(StarSaturated, Counts) {
    Graph a = star_saturated(4, 5);
    EXPECT_EQ(a.order(), 9);
    EXPECT_EQ(a.size(), 11);
    Graph b = star_saturated(3, 1);
    EXPECT_EQ(b.order(), 4);
    EXPECT_EQ(b.size(), 4);
    Graph c = star_saturated(5, 2);
    EXPECT_EQ(c.order(), 7);
    EXPECT_EQ(c.size(), 12);
    EXPECT_THROW(star_saturated(2, 3), graph_error);
    EXPECT_THROW(star_saturated(4, 0), graph_error);
}

TEST(StarSaturated, Saturated) {
    for (auto [r, len] : {std::pair{4, 5}, {5, 3}, {3, 1}, {3, 4}, {4, 1}, {5, 1}}) {
        Graph g = star_saturated(r, len);
        EXPECT_FALSE(has_minor(g, star(r))) << r << "," << len;
        EXPECT_EQ(is_saturated(g, star(r)).status, SaturationStatus::saturated) << r << "," << len;
    }
    EXPECT_FALSE(oracle::has_minor(star_saturated(3, 2), star(3)));
}

TEST(GlueOnClique, Numbering) {
    Graph g = glue_on_clique({path(3), {1}, 2});
    EXPECT_EQ(g, make_graph(5, {{0, 1}, {1, 2}, {3, 1}, {1, 4}}));
    EXPECT_THROW(glue_on_clique({path(3), {0, 2}, 2}), graph_error);
    EXPECT_THROW(glue_on_clique({path(3), {0, 0}, 2}), graph_error);
    EXPECT_THROW(glue_on_clique({path(3), {5}, 2}), graph_error);
    EXPECT_THROW(glue_on_clique({path(3), {0}, 0}), graph_error);
    EXPECT_EQ(glue_on_clique({complete(4), {0, 1, 2}, 1}), complete(4));
}

TEST(BlockChain, TwoCopyCounts) {
    struct Row {
        ChainFamily f;
        int n, m;
        Rational density;
    };
    for (const auto& row : {Row{ChainFamily::gp6, 30, 47, {23, 14}}, Row{ChainFamily::gp7, 50, 77, {19, 12}},
                            Row{ChainFamily::gp8, 74, 113, {14, 9}}, Row{ChainFamily::wagner, 14, 23, {11, 6}}}) {
        Graph g = block_chain(row.f, 2);
        EXPECT_EQ(g.order(), row.n);
        EXPECT_EQ(g.size(), row.m);
        auto b = chain_block(row.f);
        EXPECT_EQ(block_density(b.block, 2), row.density);
        EXPECT_TRUE(spanning_edge_bound(b.block, complete(b.r)));
        EXPECT_TRUE(chain_minor_free_by_count(row.f));
    }
}

TEST(BlockChain, LongerChainCounts) {
    for (auto f : {ChainFamily::gp6, ChainFamily::gp7, ChainFamily::gp8, ChainFamily::wagner})
        for (int c = 1; c <= 5; ++c) {
            Graph g = block_chain(f, c);
            auto b = chain_block(f);
            EXPECT_EQ(g.order(), 2 + c * (b.block.order() - 2));
            EXPECT_EQ(g.size(), 1 + c * (b.block.size() - 1));
            // The whole-graph count only decides a single block; longer chains rely on the per-block argument.
            EXPECT_EQ(spanning_edge_bound(g, complete(b.r)), c == 1) << b.name << " x" << c;
            EXPECT_TRUE(is_connected(g));
        }
}

TEST(BlockChain, PerBlockArgumentAgreesWithSearch) {
    Graph w2 = block_chain(ChainFamily::wagner, 2);
    EXPECT_FALSE(spanning_edge_bound(w2, complete(5)));
    EXPECT_FALSE(has_minor(w2, complete(5)));
}

TEST(BlockChain, WagnerPairIsSaturated) {
    EXPECT_EQ(is_saturated(block_chain(ChainFamily::wagner, 2), complete(5)).status, SaturationStatus::saturated);
}

TEST(BlockChain, ParseFamily) {
    EXPECT_EQ(parse_chain_family("gp7"), ChainFamily::gp7);
    EXPECT_EQ(parse_chain_family("wagner"), ChainFamily::wagner);
    EXPECT_THROW(parse_chain_family("gp9"), graph_error);
}
