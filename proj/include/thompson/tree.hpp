#pragma once

/**
 * @file tree.hpp
 * @brief Planar rooted k-ary trees, the halves of a tree diagram.
 *
 * A tree is stored as its preorder shape: one byte per node, 1 for an
 * internal node and 0 for a leaf. Every internal node has exactly `arity`
 * children, so the preorder sequence determines the tree and structural
 * equality of the byte vector is planar-tree equality.
 *
 * Leaves are addressed by their root-to-leaf digit strings: digit 0 is the
 * leftmost edge, digit arity-1 the rightmost.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {

inline constexpr int kMaxArity = 36;

inline char digit_char(int d) {
    constexpr std::string_view table = "0123456789abcdefghijklmnopqrstuvwxyz";
    return table.at(static_cast<std::size_t>(d));
}

inline int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw InvalidDigit(std::string("invalid digit '") + c + "'");
}

/// Root-to-vertex path in a k-ary tree; the empty path is the root.
struct Address {
    std::string digits;

    Address() = default;
    explicit Address(std::string d) : digits(std::move(d)) {}

    std::size_t size() const noexcept { return digits.size(); }
    bool empty() const noexcept { return digits.empty(); }
    int operator[](std::size_t i) const { return digit_value(digits[i]); }

    Address child(int d) const { return Address(digits + digit_char(d)); }

    bool is_prefix_of(const Address& other) const {
        return other.digits.size() >= digits.size() &&
               other.digits.compare(0, digits.size(), digits) == 0;
    }

    /// Every digit is below `arity`.
    bool valid_for(int arity) const {
        return std::all_of(digits.begin(), digits.end(), [&](char c) {
            try {
                return digit_value(c) < arity;
            } catch (const InvalidDigit&) {
                return false;
            }
        });
    }

    /// ".d1d2..." form.
    std::string dotted() const { return "." + digits; }

    friend bool operator==(const Address&, const Address&) = default;
    friend auto operator<=>(const Address&, const Address&) = default;
};

using ExpansionScript = std::vector<std::size_t>;

/// Summary of one internal node, in preorder.
struct InternalNode {
    Address address;
    std::size_t first_leaf = 0;
    std::vector<std::size_t> child_leaf_counts;

    std::size_t leaf_count() const {
        std::size_t n = 0;
        for (auto c : child_leaf_counts) n += c;
        return n;
    }
    bool is_caret() const {
        return std::all_of(child_leaf_counts.begin(), child_leaf_counts.end(),
                           [](std::size_t c) { return c == 1; });
    }
};

class KTree {
public:
    using Shape = std::vector<std::uint8_t>;

    /// Single leaf of the given arity.
    explicit KTree(int arity = 2) : arity_(check_arity(arity)), shape_{0} {}

    static KTree from_shape(int arity, Shape shape) {
        KTree t(arity);
        std::size_t pos = 0;
        if (!t.skip(shape, pos) || pos != shape.size())
            throw Error("malformed preorder shape");
        t.shape_ = std::move(shape);
        return t;
    }

    /// Tree whose leaves are exactly `addresses` (any order).
    static KTree from_addresses(int arity, std::vector<Address> addresses) {
        check_arity(arity);
        for (const auto& a : addresses)
            if (!a.valid_for(arity)) throw InvalidDigit("address " + a.dotted() + " has a digit >= arity");
        std::sort(addresses.begin(), addresses.end());
        if (std::adjacent_find(addresses.begin(), addresses.end()) != addresses.end())
            throw Error("duplicate leaf address");
        KTree t(arity);
        t.shape_.clear();
        std::size_t next = 0;
        t.build_from(addresses, Address{}, next);
        if (next != addresses.size()) throw Error("leaf addresses do not form a complete tree");
        return t;
    }

    /// Root with the given subtrees as children, left to right.
    static KTree graft(int arity, const std::vector<KTree>& children) {
        if (children.size() != static_cast<std::size_t>(arity))
            throw Error("graft needs exactly `arity` children");
        KTree t(arity);
        t.shape_ = {1};
        for (const auto& c : children) {
            if (c.arity_ != arity) throw ArityMismatch(arity, c.arity_);
            t.shape_.insert(t.shape_.end(), c.shape_.begin(), c.shape_.end());
        }
        return t;
    }

    int arity() const noexcept { return arity_; }
    const Shape& shape() const noexcept { return shape_; }
    bool is_leaf() const noexcept { return shape_.size() == 1; }

    std::size_t internal_count() const {
        return static_cast<std::size_t>(std::count(shape_.begin(), shape_.end(), std::uint8_t{1}));
    }
    std::size_t leaf_count() const { return shape_.size() - internal_count(); }

    /// Leaf addresses in left-to-right order.
    std::vector<Address> leaf_addresses() const {
        std::vector<Address> out;
        out.reserve(leaf_count());
        std::size_t pos = 0;
        collect_addresses(pos, Address{}, out);
        return out;
    }

    /// Root subtrees, left to right. Empty for a leaf.
    std::vector<KTree> children() const {
        std::vector<KTree> out;
        if (is_leaf()) return out;
        std::size_t pos = 1;
        for (int c = 0; c < arity_; ++c) {
            std::size_t start = pos;
            skip(shape_, pos);
            KTree t(arity_);
            t.shape_.assign(shape_.begin() + static_cast<std::ptrdiff_t>(start),
                            shape_.begin() + static_cast<std::ptrdiff_t>(pos));
            out.push_back(std::move(t));
        }
        return out;
    }

    std::vector<InternalNode> internal_nodes() const {
        std::vector<InternalNode> out;
        std::size_t pos = 0;
        std::size_t leaf = 0;
        collect_nodes(pos, leaf, Address{}, out);
        return out;
    }

    /// Leaf indices i such that leaves i..i+arity-1 are the children of one node.
    std::vector<std::size_t> caret_positions() const {
        std::vector<std::size_t> out;
        std::size_t leaf = 0;
        for (std::size_t p = 0; p < shape_.size(); ++p) {
            if (shape_[p] == 0) {
                ++leaf;
                continue;
            }
            if (p + static_cast<std::size_t>(arity_) < shape_.size() &&
                std::all_of(shape_.begin() + static_cast<std::ptrdiff_t>(p + 1),
                            shape_.begin() + static_cast<std::ptrdiff_t>(p + 1 + arity_),
                            [](std::uint8_t b) { return b == 0; }))
                out.push_back(leaf);
        }
        return out;
    }

    /// Replace leaf `leaf_index` by a caret.
    KTree expand_at(std::size_t leaf_index) const {
        std::size_t p = leaf_position(leaf_index);
        KTree t = *this;
        t.shape_[p] = 1;
        t.shape_.insert(t.shape_.begin() + static_cast<std::ptrdiff_t>(p + 1),
                        static_cast<std::size_t>(arity_), std::uint8_t{0});
        return t;
    }

    /// Inverse of expand_at: the caret whose first leaf is `leaf_index` becomes a leaf.
    KTree collapse_caret(std::size_t leaf_index) const {
        std::size_t p = leaf_position(leaf_index);
        if (p == 0 || shape_[p - 1] != 1 || p + static_cast<std::size_t>(arity_) > shape_.size() ||
            !std::all_of(shape_.begin() + static_cast<std::ptrdiff_t>(p),
                         shape_.begin() + static_cast<std::ptrdiff_t>(p + arity_),
                         [](std::uint8_t b) { return b == 0; }))
            throw Error("no caret starts at leaf " + std::to_string(leaf_index));
        KTree t = *this;
        t.shape_.erase(t.shape_.begin() + static_cast<std::ptrdiff_t>(p),
                       t.shape_.begin() + static_cast<std::ptrdiff_t>(p + arity_));
        t.shape_[p - 1] = 0;
        return t;
    }

    KTree apply(const ExpansionScript& script) const {
        KTree t = *this;
        for (auto i : script) t = t.expand_at(i);
        return t;
    }

    /// Compact text form of the shape, e.g. "1000" for a single caret.
    std::string shape_string() const {
        std::string s;
        for (auto b : shape_) s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const KTree&, const KTree&) = default;
    friend auto operator<=>(const KTree&, const KTree&) = default;

private:
    static int check_arity(int arity) {
        if (arity < 2 || arity > kMaxArity) throw UnsupportedArity(arity);
        return arity;
    }

    bool skip(const Shape& s, std::size_t& pos) const {
        if (pos >= s.size()) return false;
        if (s[pos++] == 0) return true;
        for (int c = 0; c < arity_; ++c)
            if (!skip(s, pos)) return false;
        return true;
    }

    std::size_t leaf_position(std::size_t leaf_index) const {
        std::size_t leaf = 0;
        for (std::size_t p = 0; p < shape_.size(); ++p) {
            if (shape_[p] == 0) {
                if (leaf == leaf_index) return p;
                ++leaf;
            }
        }
        throw IndexOutOfRange(leaf_index, leaf);
    }

    void collect_addresses(std::size_t& pos, const Address& at, std::vector<Address>& out) const {
        if (shape_[pos++] == 0) {
            out.push_back(at);
            return;
        }
        for (int c = 0; c < arity_; ++c) collect_addresses(pos, at.child(c), out);
    }

    std::size_t collect_nodes(std::size_t& pos, std::size_t& leaf, const Address& at,
                              std::vector<InternalNode>& out) const {
        if (shape_[pos++] == 0) {
            ++leaf;
            return 1;
        }
        std::size_t slot = out.size();
        out.push_back(InternalNode{at, leaf, {}});
        std::vector<std::size_t> counts;
        for (int c = 0; c < arity_; ++c) counts.push_back(collect_nodes(pos, leaf, at.child(c), out));
        out[slot].child_leaf_counts = counts;
        return out[slot].leaf_count();
    }

    void build_from(const std::vector<Address>& leaves, const Address& at, std::size_t& next) {
        if (next >= leaves.size() || !at.is_prefix_of(leaves[next]))
            throw Error("leaf addresses do not form a complete tree");
        if (leaves[next] == at) {
            shape_.push_back(0);
            ++next;
            return;
        }
        shape_.push_back(1);
        for (int c = 0; c < arity_; ++c) build_from(leaves, at.child(c), next);
    }

    int arity_;
    Shape shape_;
};

/// Tree of m internal nodes chained along last children.
inline KTree right_comb(int arity, std::size_t m) {
    KTree t(arity);
    for (std::size_t i = 0; i < m; ++i) t = t.expand_at(t.leaf_count() - 1);
    return t;
}

inline bool is_right_comb(const KTree& t) {
    return t == right_comb(t.arity(), t.internal_count());
}

struct Refinement {
    KTree tree;
    ExpansionScript script_a;
    ExpansionScript script_b;
};

namespace detail {

inline KTree refine_union(const KTree& a, const KTree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    auto ca = a.children();
    auto cb = b.children();
    std::vector<KTree> out;
    for (std::size_t i = 0; i < ca.size(); ++i) out.push_back(refine_union(ca[i], cb[i]));
    return KTree::graft(a.arity(), out);
}

// Expansions turning `from` into `to`, emitted in preorder so that each recorded
// index refers to the tree as already modified by the earlier entries.
inline void script_between(const KTree& from, const KTree& to, std::size_t& leaf, ExpansionScript& out) {
    if (to.is_leaf()) {
        ++leaf;
        return;
    }
    std::vector<KTree> from_children;
    if (from.is_leaf()) {
        out.push_back(leaf);
        from_children.assign(static_cast<std::size_t>(to.arity()), KTree(to.arity()));
    } else {
        from_children = from.children();
    }
    auto to_children = to.children();
    for (std::size_t i = 0; i < to_children.size(); ++i)
        script_between(from_children[i], to_children[i], leaf, out);
}

}  // namespace detail

/// Least common expansion of two trees, with replayable scripts from each side.
inline Refinement common_refinement(const KTree& a, const KTree& b) {
    if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity());
    Refinement r{detail::refine_union(a, b), {}, {}};
    std::size_t leaf = 0;
    detail::script_between(a, r.tree, leaf, r.script_a);
    leaf = 0;
    detail::script_between(b, r.tree, leaf, r.script_b);
    return r;
}

/// All trees with m internal nodes, sorted lexicographically by leaf-address list.
inline std::vector<KTree> enumerate_trees(int arity, std::size_t m) {
    std::map<std::size_t, std::vector<KTree::Shape>> memo;
    std::function<const std::vector<KTree::Shape>&(std::size_t)> shapes = [&](std::size_t n)
        -> const std::vector<KTree::Shape>& {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        std::vector<KTree::Shape> out;
        if (n == 0) {
            out.push_back({0});
        } else {
            // distribute n-1 internal nodes among `arity` children
            std::vector<KTree::Shape> partial{{1}};
            std::vector<std::size_t> used{0};
            for (int c = 0; c < arity; ++c) {
                std::vector<KTree::Shape> next_partial;
                std::vector<std::size_t> next_used;
                for (std::size_t i = 0; i < partial.size(); ++i) {
                    std::size_t remaining = n - 1 - used[i];
                    std::size_t lo = (c == arity - 1) ? remaining : 0;
                    for (std::size_t take = lo; take <= remaining; ++take) {
                        for (const auto& sub : shapes(take)) {
                            auto s = partial[i];
                            s.insert(s.end(), sub.begin(), sub.end());
                            next_partial.push_back(std::move(s));
                            next_used.push_back(used[i] + take);
                        }
                    }
                }
                partial = std::move(next_partial);
                used = std::move(next_used);
            }
            out = std::move(partial);
        }
        return memo[n] = std::move(out);
    };
    std::vector<KTree> trees;
    for (const auto& s : shapes(m)) trees.push_back(KTree::from_shape(arity, s));
    std::vector<std::pair<std::vector<Address>, std::size_t>> keyed;
    for (std::size_t i = 0; i < trees.size(); ++i) keyed.emplace_back(trees[i].leaf_addresses(), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<KTree> sorted;
    sorted.reserve(trees.size());
    for (const auto& [key, i] : keyed) sorted.push_back(trees[i]);
    return sorted;
}

}  // namespace thompson
