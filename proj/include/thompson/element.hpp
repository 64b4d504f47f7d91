#pragma once

/**
 * @file element.hpp
 * @brief Elements of F_k as reduced tree pairs.
 *
 * Composition follows the left-to-right convention: multiply(g, h) acts
 * first by g and then by h, so as maps (g*h)(x) = h(g(x)). Both conventions
 * exist in the literature; every caller in this library assumes this one.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

/// Chooses one of the available opposing-caret positions during reduction.
using CaretPicker = std::function<std::size_t(const std::vector<std::size_t>& candidates)>;

namespace detail {

inline std::vector<std::size_t> opposing_carets(const KTree& plus, const KTree& minus) {
    auto a = plus.caret_positions();
    auto b = minus.caret_positions();
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common;
}

}  // namespace detail

class Element {
public:
    /// Identity of F_arity.
    explicit Element(int arity = 3) : plus_(arity), minus_(arity) {}

    /// Builds the element represented by (plus, minus), reducing it.
    Element(KTree plus, KTree minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
        validate();
        reduce_in_place(nullptr);
    }

    /// Same as the pair constructor but with a caller-chosen reduction order.
    static Element reduced_with(KTree plus, KTree minus, const CaretPicker& pick) {
        Element e(plus.arity());
        e.plus_ = std::move(plus);
        e.minus_ = std::move(minus);
        e.validate();
        e.reduce_in_place(&pick);
        return e;
    }

    static Element identity(int arity) { return Element(arity); }

    int arity() const noexcept { return plus_.arity(); }
    const KTree& plus() const noexcept { return plus_; }
    const KTree& minus() const noexcept { return minus_; }
    std::size_t leaf_count() const { return plus_.leaf_count(); }
    std::size_t splits() const { return plus_.internal_count(); }
    bool is_identity() const { return plus_.is_leaf(); }

    Element inverse() const {
        Element e(arity());
        e.plus_ = minus_;
        e.minus_ = plus_;
        return e;
    }

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;

private:
    void validate() const {
        if (plus_.arity() != minus_.arity()) throw ArityMismatch(plus_.arity(), minus_.arity());
        if (plus_.leaf_count() != minus_.leaf_count())
            throw LeafCountMismatch(plus_.leaf_count(), minus_.leaf_count());
    }

    void reduce_in_place(const CaretPicker* pick) {
        for (;;) {
            auto common = detail::opposing_carets(plus_, minus_);
            if (common.empty()) return;
            std::size_t i = pick ? common.at((*pick)(common) % common.size()) : common.front();
            plus_ = plus_.collapse_caret(i);
            minus_ = minus_.collapse_caret(i);
        }
    }

    KTree plus_;
    KTree minus_;
};

/// True when (plus, minus) has no opposing carets.
inline bool is_reduced_pair(const KTree& plus, const KTree& minus) {
    return detail::opposing_carets(plus, minus).empty();
}

inline Element reduce(const KTree& plus, const KTree& minus) { return Element(plus, minus); }

/// Product g*h: first g, then h.
inline Element multiply(const Element& g, const Element& h) {
    if (g.arity() != h.arity()) throw ArityMismatch(g.arity(), h.arity());
    auto r = common_refinement(g.minus(), h.plus());
    return Element(g.plus().apply(r.script_a), h.minus().apply(r.script_b));
}

inline Element inverse(const Element& g) { return g.inverse(); }

inline Element power(const Element& g, long long e) {
    Element base = e < 0 ? g.inverse() : g;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Element acc = Element::identity(g.arity());
    while (n) {
        if (n & 1U) acc = multiply(acc, base);
        base = multiply(base, base);
        n >>= 1U;
    }
    return acc;
}

inline Element product(int arity, const std::vector<Element>& factors) {
    Element acc = Element::identity(arity);
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
}

/// Conjugate c^{-1} g c.
inline Element conjugate(const Element& g, const Element& c) {
    return multiply(multiply(c.inverse(), g), c);
}

/// Positive elements are exactly those whose bottom tree is a right comb.
inline bool is_positive(const Element& g) { return is_right_comb(g.minus()); }

/// All reduced elements whose trees each have m internal nodes.
inline std::vector<Element> enumerate_elements(int arity, std::size_t m) {
    auto trees = enumerate_trees(arity, m);
    std::vector<Element> out;
    for (const auto& a : trees)
        for (const auto& b : trees)
            if (is_reduced_pair(a, b)) out.emplace_back(a, b);
    return out;
}

/// All reduced elements with at most `max_splits` internal nodes per tree.
inline std::vector<Element> enumerate_elements_upto(int arity, std::size_t max_splits) {
    std::vector<Element> out;
    for (std::size_t m = 0; m <= max_splits; ++m) {
        auto level = enumerate_elements(arity, m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace thompson
