#pragma once

#include "thompson/words.hpp"

namespace thompson {

/// Embedding F_2 -> F_3, x_i -> y_{2i}.
inline Element iota(const Element& g) {
    if (g.arity() != 2) throw UnsupportedArity(g.arity());
    return substitute(g, 3, [](std::size_t i) { return elementary(3, 2 * i); });
}

/// Right shift of F_3, y_i -> y_{i+2}.
inline Element phi_R(const Element& g) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    return substitute(g, 3, [](std::size_t i) { return elementary(3, i + 2); });
}

/// Right shift drawn on diagrams: each tree hangs as the last child of a new root.
inline Element phi_R_tree(const Element& g) {
    if (g.arity() != 3) throw UnsupportedArity(g.arity());
    auto hang = [](const KTree& t) {
        KTree leaf(3);
        return KTree::graft(3, {leaf, leaf, t});
    };
    return Element(hang(g.plus()), hang(g.minus()));
}

/// Ternary element whose Γ-graph is used for g: g itself for arity 3, iota(g) for arity 2.
inline Element as_ternary(const Element& g) {
    if (g.arity() == 3) return g;
    if (g.arity() == 2) return iota(g);
    throw UnsupportedArity(g.arity());
}

}  // namespace thompson
