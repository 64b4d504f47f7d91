#pragma once

/**
 * @file gamma.hpp
 * @brief Γ-graphs of ternary tree diagrams.
 *
 * With n leaves (n odd) the black regions of the strip are the even gaps
 * 0, 2, ..., n-1 between leaves; vertex j is gap 2j. Every internal node
 * with leftmost leaf a and child leaf counts A, B, C contributes one edge:
 *
 *     a even:  gap a      -- gap a+A+B
 *     a odd:   gap a+A    -- gap a+A+B+C
 *
 * Top-tree nodes give the top edges, bottom-tree nodes the bottom edges.
 * Parallel edges are kept.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "thompson/embed.hpp"
#include "thompson/homeo.hpp"

namespace thompson {

enum class Side { top, bottom };

struct GammaEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    Side side = Side::top;
    std::size_t source = 0;  ///< preorder index of the internal node in its tree

    friend bool operator==(const GammaEdge&, const GammaEdge&) = default;
};

struct GammaGraph {
    std::size_t vertex_count = 1;
    std::vector<GammaEdge> edges;

    std::vector<GammaEdge> side_edges(Side s) const {
        std::vector<GammaEdge> out;
        for (const auto& e : edges)
            if (e.side == s) out.push_back(e);
        return out;
    }

    /// Unordered endpoint pairs of one side, sorted, with multiplicity.
    std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(Side s) const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : side_edges(s)) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline void add_tree_edges(const KTree& t, Side side, GammaGraph& g) {
    auto nodes = t.internal_nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        const auto& c = n.child_leaf_counts;
        std::size_t a = n.first_leaf;
        std::size_t left, right;
        if (a % 2 == 0) {
            left = a;
            right = a + c[0] + c[1];
        } else {
            left = a + c[0];
            right = a + c[0] + c[1] + c[2];
        }
        g.edges.push_back({left / 2, right / 2, side, i});
    }
}

}  // namespace detail

/// Γ-graph of a possibly unreduced ternary diagram.
inline GammaGraph gamma_of_trees(const KTree& plus, const KTree& minus) {
    if (plus.arity() != 3) throw UnsupportedArity(plus.arity());
    if (minus.arity() != 3) throw UnsupportedArity(minus.arity());
    if (plus.leaf_count() != minus.leaf_count()) throw LeafCountMismatch(plus.leaf_count(), minus.leaf_count());
    GammaGraph out;
    out.vertex_count = (plus.leaf_count() + 1) / 2;
    detail::add_tree_edges(plus, Side::top, out);
    detail::add_tree_edges(minus, Side::bottom, out);
    return out;
}

/// Γ-graph of a ternary element; binary elements go through iota first.
inline GammaGraph gamma_of(const Element& g) {
    if (g.arity() != 2 && g.arity() != 3) throw UnsupportedArity(g.arity());
    Element t = as_ternary(g);
    return gamma_of_trees(t.plus(), t.minus());
}

enum class Colour : std::int8_t { plus = 1, minus = -1 };

inline char colour_char(Colour c) { return c == Colour::plus ? '+' : '-'; }

inline std::vector<std::vector<std::size_t>> adjacency(const GammaGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

/// Proper 2-colouring with vertex 0 coloured +, if one exists.
inline std::optional<std::vector<Colour>> two_colouring(const GammaGraph& g) {
    auto adj = adjacency(g);
    std::vector<int> colour(g.vertex_count, 0);
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
        if (colour[s]) continue;
        colour[s] = 1;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                if (!colour[v]) {
                    colour[v] = -colour[u];
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Colour> out;
    for (int c : colour) out.push_back(c > 0 ? Colour::plus : Colour::minus);
    return out;
}

inline bool is_bipartite(const GammaGraph& g) { return two_colouring(g).has_value(); }

/// A cycle of odd length as a closed vertex walk (first vertex repeated at the end), or empty.
inline std::vector<std::size_t> odd_cycle(const GammaGraph& g) {
    auto adj = adjacency(g);
    const std::size_t none = g.vertex_count;
    std::vector<std::size_t> parent(g.vertex_count, none), depth(g.vertex_count, 0);
    std::vector<bool> seen(g.vertex_count, false);
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (depth[v] == depth[u]) {
                    std::vector<std::size_t> left{u}, right{v};
                    while (left.back() != right.back()) {
                        left.push_back(parent[left.back()]);
                        right.push_back(parent[right.back()]);
                    }
                    std::vector<std::size_t> cycle(left.begin(), left.end());
                    for (auto it = right.rbegin() + 1; it != right.rend(); ++it) cycle.push_back(*it);
                    cycle.push_back(u);
                    return cycle;
                }
            }
        }
    }
    return {};
}

/// Integer polynomial, coefficient i multiplies Q^i.
struct Polynomial {
    std::vector<BigInt> coeffs;

    BigInt operator()(long long q) const {
        BigInt acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
        return acc;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] == 0) continue;
            BigInt c = coeffs[i];
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            if (c < 0) c = -c;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << "Q";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

namespace detail {

using SimpleGraph = std::set<std::pair<std::size_t, std::size_t>>;

inline std::vector<BigInt> chromatic(std::size_t n, const SimpleGraph& edges) {
    if (edges.empty()) {
        std::vector<BigInt> p(n + 1, 0);
        p[n] = 1;
        return p;
    }
    auto [a, b] = *edges.begin();
    SimpleGraph deleted(std::next(edges.begin()), edges.end());
    // contract b into a, relabel n-1 as b
    SimpleGraph contracted;
    auto relabel = [&](std::size_t x) {
        if (x == b) x = a;
        if (x == n - 1) x = (b == n - 1) ? a : b;
        return x;
    };
    for (const auto& [u, v] : deleted) {
        auto x = relabel(u), y = relabel(v);
        if (x != y) contracted.insert({std::min(x, y), std::max(x, y)});
    }
    auto pd = chromatic(n, deleted);
    auto pc = chromatic(n - 1, contracted);
    for (std::size_t i = 0; i < pc.size(); ++i) pd[i] -= pc[i];
    return pd;
}

}  // namespace detail

/// Chromatic polynomial of the underlying simple graph, by deletion-contraction.
inline Polynomial chromatic_polynomial(const GammaGraph& g) {
    detail::SimpleGraph simple;
    for (const auto& e : g.edges) {
        if (e.u == e.v) throw Error("loop in Γ-graph");
        simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    return Polynomial{detail::chromatic(g.vertex_count, simple)};
}

/// Chr_Γ(Q) / (Q-1)^(n-1), n the leaf count of the reduced ternary diagram.
inline Rational chr_value(const Element& g, long long q) {
    if (q < 2) throw Error("Q must be at least 2");
    Element t = as_ternary(g);
    BigInt num = chromatic_polynomial(gamma_of(t))(q);
    BigInt den = boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(t.leaf_count() - 1));
    return Rational(num, den);
}

/// Smallest eigenvalue of M[i][j] = chr_value(g_i^{-1} g_j, Q), entries exact, eigen-solve in double.
inline double gram_min_eigenvalue(const std::vector<Element>& elements, long long q) {
    if (elements.empty()) throw Error("empty element list");
    const auto n = static_cast<Eigen::Index>(elements.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = static_cast<double>(
                chr_value(multiply(elements[static_cast<std::size_t>(i)].inverse(),
                                   elements[static_cast<std::size_t>(j)]),
                          q));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

/// Graphviz rendering; vertices v0..vm, edge attribute side=top|bottom.
inline std::string to_dot(const GammaGraph& g, const std::string& name) {
    std::ostringstream os;
    std::string escaped;
    for (char c : name) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
    }
    os << "graph \"" << escaped << "\" {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) os << "  v" << v << ";\n";
    for (const auto& e : g.edges)
        os << "  v" << e.u << " -- v" << e.v << " [side=" << (e.side == Side::top ? "top" : "bottom") << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace thompson
