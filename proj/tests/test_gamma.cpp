#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thompson/oriented.hpp"

using namespace thompson;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Element w(const std::string& s, int k = 3) { return eval_word(parse_word(s, k)); }

long long brute_colourings(const GammaGraph& g, int q) {
    long long count = 0;
    std::vector<int> c(g.vertex_count, 0);
    std::function<void(std::size_t)> go = [&](std::size_t v) {
        if (v == g.vertex_count) {
            for (const auto& e : g.edges)
                if (c[e.u] == c[e.v]) return;
            ++count;
            return;
        }
        for (int x = 0; x < q; ++x) {
            c[v] = x;
            go(v + 1);
        }
    };
    go(0);
    return count;
}

bool spanning_tree(std::size_t n, const std::vector<GammaEdge>& edges) {
    if (edges.size() + 1 != n) return false;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges) {
        auto a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

TEST(Gamma, IdentityGraph) {
    auto g = gamma_of(Element::identity(3));
    EXPECT_EQ(g.vertex_count, 1u);
    EXPECT_TRUE(g.edges.empty());
    auto c = two_colouring(g);
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], Colour::plus);
}

TEST(Gamma, SmallDiagrams) {
    auto g0 = gamma_of(w("y0"));
    EXPECT_EQ(g0.vertex_count, 3u);
    EXPECT_EQ(g0.edge_pairs(Side::top), (Pairs{{0, 1}, {0, 2}}));
    EXPECT_EQ(g0.edge_pairs(Side::bottom), (Pairs{{0, 1}, {1, 2}}));

    auto g1 = gamma_of(w("y1^2"));
    EXPECT_EQ(g1.vertex_count, 4u);
    EXPECT_EQ(g1.edge_pairs(Side::top), (Pairs{{0, 3}, {1, 2}, {2, 3}}));
    EXPECT_EQ(g1.edge_pairs(Side::bottom), (Pairs{{0, 1}, {1, 2}, {2, 3}}));

    auto g2 = gamma_of(w("y0 y3"));
    EXPECT_EQ(g2.vertex_count, 4u);
    EXPECT_EQ(g2.edge_pairs(Side::top), (Pairs{{0, 1}, {0, 3}, {2, 3}}));
    EXPECT_EQ(g2.edge_pairs(Side::bottom), (Pairs{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Gamma, Colourings) {
    EXPECT_FALSE(two_colouring(gamma_of(w("y0"))));
    auto c = two_colouring(gamma_of(w("y0 y3")));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::vector<Colour>{Colour::plus, Colour::minus, Colour::plus, Colour::minus}));
    auto cyc = odd_cycle(gamma_of(w("y0")));
    ASSERT_EQ(cyc.size(), 4u);
    EXPECT_EQ(cyc.front(), cyc.back());
    EXPECT_TRUE(odd_cycle(gamma_of(w("y1^2"))).empty());
}

TEST(Gamma, BinaryElementsGoThroughIota) {
    auto g = gamma_of(elementary(2, 0));
    EXPECT_EQ(g.vertex_count, 3u);
    EXPECT_THROW(gamma_of(elementary(4, 0)), UnsupportedArity);
}

TEST(Gamma, HalvesAreSpanningTrees) {
    for (const auto& g : enumerate_elements_upto(3, 4)) {
        auto gamma = gamma_of(g);
        EXPECT_EQ(gamma.side_edges(Side::top).size(), g.plus().internal_count());
        EXPECT_TRUE(spanning_tree(gamma.vertex_count, gamma.side_edges(Side::top)));
        EXPECT_TRUE(spanning_tree(gamma.vertex_count, gamma.side_edges(Side::bottom)));
    }
}

TEST(Gamma, BipartitenessSurvivesOpposingCarets) {
    std::mt19937 rng(13);
    for (const auto& g : enumerate_elements_upto(3, 3)) {
        KTree a = g.plus(), b = g.minus();
        for (int s = 0; s < 2; ++s) {
            std::size_t i = rng() % a.leaf_count();
            a = a.expand_at(i);
            b = b.expand_at(i);
        }
        EXPECT_EQ(is_bipartite(gamma_of_trees(a, b)), is_bipartite(gamma_of(g)));
    }
}

TEST(Gamma, LeftmostGapParityMatchesMiddleEdges) {
    for (std::size_t m = 0; m <= 5; ++m)
        for (const auto& t : enumerate_trees(3, m)) {
            for (const auto& n : t.internal_nodes()) EXPECT_EQ(n.first_leaf % 2, static_cast<std::size_t>(d_of_path(n.address) % 2));
            auto leaves = t.leaf_addresses();
            for (std::size_t i = 0; i < leaves.size(); ++i) EXPECT_EQ(i % 2, static_cast<std::size_t>(d_of_path(leaves[i]) % 2));
        }
}

TEST(Gamma, ChromaticPolynomialMatchesBruteForce) {
    for (const auto& g : enumerate_elements_upto(3, 3)) {
        auto gamma = gamma_of(g);
        auto p = chromatic_polynomial(gamma);
        for (int q = 1; q <= 4; ++q) EXPECT_EQ(p(q), brute_colourings(gamma, q));
    }
    EXPECT_EQ(chromatic_polynomial(gamma_of(Element::identity(3))).to_string(), "Q");
    EXPECT_EQ(chromatic_polynomial(gamma_of(w("y1^2")))(2), 2);
    EXPECT_EQ(chromatic_polynomial(gamma_of(w("y0")))(2), 0);
    EXPECT_EQ(chromatic_polynomial(gamma_of(w("y0"))).to_string(), "Q^3 - 3Q^2 + 2Q");
}

TEST(Gamma, ChrValues) {
    EXPECT_EQ(chr_value(Element::identity(3), 5), 5);
    EXPECT_EQ(chr_value(w("y0"), 2), 0);
    EXPECT_EQ(chr_value(w("y1^2"), 2), 2);
    EXPECT_EQ(chr_value(w("y1^2"), 3), Rational(18, 64));
    for (const auto& g : enumerate_elements_upto(3, 3)) EXPECT_EQ(chr_value(g, 2), is_oriented(g) ? 2 : 0);
}

TEST(Gamma, GramMatrix) {
    EXPECT_NEAR(gram_min_eigenvalue({Element::identity(3)}, 2), 2.0, 1e-12);
    EXPECT_GE(gram_min_eigenvalue({Element::identity(3), w("y0 y3")}, 2), -1e-8);
    EXPECT_THROW(gram_min_eigenvalue({}, 2), Error);
}

TEST(Gamma, DotOutput) {
    auto dot = to_dot(gamma_of(w("y0")), "y0");
    EXPECT_EQ(dot,
              "graph \"y0\" {\n  v0;\n  v1;\n  v2;\n"
              "  v0 -- v2 [side=top];\n  v0 -- v1 [side=top];\n"
              "  v0 -- v1 [side=bottom];\n  v1 -- v2 [side=bottom];\n}\n");
}
