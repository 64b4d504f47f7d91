#pragma once

/**
 * @file subgroups.hpp
 * @brief G_k and its generators, the gadget maps phi_k, the substitutions
 *        alpha_T into F, the slope abelianization and K_(a,b), relation sweeps.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "thompson/oriented.hpp"

namespace thompson {

/// Even log-slope at 1.
inline bool in_Gk(const Element& g) { return log_slope_at_1(g) % 2 == 0; }

/// w_i = y_i y_k for i < k, and w_n = w_0^{-1} w_{n-k+1} w_0 beyond.
inline Element gk_gen(int k, std::size_t n) {
    if (k < 2) throw UnsupportedArity(k);
    const auto ku = static_cast<std::size_t>(k);
    if (n < ku) return multiply(elementary(k, n), elementary(k, ku));
    Element w0 = gk_gen(k, 0);
    return conjugate(gk_gen(k, n - ku + 1), w0);
}

/// Each node of arity 2k-1 becomes a node of arity k whose last child is a
/// second node of arity k; the first k-1 children hang from the top node.
inline KTree Phi_k_tree(int k, const KTree& t) {
    if (k < 2) throw UnsupportedArity(k);
    if (t.arity() != 2 * k - 1) throw ArityMismatch(2 * k - 1, t.arity());
    if (t.is_leaf()) return KTree(k);
    auto kids = t.children();
    std::vector<KTree> top, bottom;
    for (int i = 0; i < 2 * k - 1; ++i) {
        KTree c = Phi_k_tree(k, kids[static_cast<std::size_t>(i)]);
        (i < k - 1 ? top : bottom).push_back(std::move(c));
    }
    top.push_back(KTree::graft(k, bottom));
    return KTree::graft(k, top);
}

inline Element phi_k(int k, const Element& g) {
    if (g.arity() != 2 * k - 1) throw ArityMismatch(2 * k - 1, g.arity());
    return Element(Phi_k_tree(k, g.plus()), Phi_k_tree(k, g.minus()));
}

/// Left edges from the leftmost leaf up to the root.
inline long long ell_left(const KTree& t) {
    if (t.arity() != 2) throw UnsupportedArity(t.arity());
    return static_cast<long long>(t.leaf_addresses().front().size());
}

/// Right edges from the rightmost leaf up to the root.
inline long long ell_right(const KTree& t) {
    if (t.arity() != 2) throw UnsupportedArity(t.arity());
    return static_cast<long long>(t.leaf_addresses().back().size());
}

namespace detail {

inline KTree substitute_nodes(const KTree& t, const KTree& pattern) {
    if (t.is_leaf()) return KTree(2);
    auto kids = t.children();
    std::size_t next = 0;
    std::function<KTree(const KTree&)> fill = [&](const KTree& p) -> KTree {
        if (p.is_leaf()) return substitute_nodes(kids[next++], pattern);
        std::vector<KTree> sub;
        for (const auto& c : p.children()) sub.push_back(fill(c));
        return KTree::graft(2, sub);
    };
    return fill(pattern);
}

}  // namespace detail

/// Binary element obtained by replacing every k-ary node of both trees of g by T.
inline Element alpha_T(const KTree& t, const Element& g) {
    if (t.arity() != 2) throw UnsupportedArity(t.arity());
    if (t.leaf_count() != static_cast<std::size_t>(g.arity())) throw LeafCountMismatch(t.leaf_count(), g.arity());
    return Element(detail::substitute_nodes(g.plus(), t), detail::substitute_nodes(g.minus(), t));
}

struct AbelianImage {
    long long at0 = 0;
    long long at1 = 0;

    friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

/// (log_2 f'(0), log_2 f'(1)).
inline AbelianImage pi_ab(const Element& g) {
    if (g.arity() != 2) throw UnsupportedArity(g.arity());
    return {log_slope_at_0(g), log_slope_at_1(g)};
}

inline bool in_K_ab(const Element& g, long long a, long long b) {
    if (a < 1 || b < 1) throw Error("K_(a,b) needs a, b >= 1");
    auto p = pi_ab(g);
    return p.at0 % a == 0 && p.at1 % b == 0;
}

inline bool in_parabolic(const Element& g, const Rational& x) { return stabilizes_point(g, x); }

using Family = std::function<Element(std::size_t)>;

/// First (n, l) with l < n <= n_max and g_n g_l != g_l g_{n+k-1}.
inline std::optional<std::pair<std::size_t, std::size_t>> relation_check(const Family& family, int k,
                                                                         std::size_t n_max) {
    if (k < 2) throw UnsupportedArity(k);
    if (n_max < static_cast<std::size_t>(k)) throw PreconditionViolated("relation sweep needs n_max >= k");
    std::vector<Element> cache;
    auto at = [&](std::size_t i) -> const Element& {
        while (cache.size() <= i) cache.push_back(family(cache.size()));
        return cache[i];
    };
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t l = 0; l < n; ++l)
            if (!(multiply(at(n), at(l)) == multiply(at(l), at(n + static_cast<std::size_t>(k) - 1))))
                return std::make_pair(n, l);
    return std::nullopt;
}

}  // namespace thompson
