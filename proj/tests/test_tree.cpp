#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "thompson/tree.hpp"

using namespace thompson;

namespace {

std::vector<std::string> addrs(const KTree& t) {
    std::vector<std::string> out;
    for (const auto& a : t.leaf_addresses()) out.push_back(a.digits);
    return out;
}

// k-ary trees with m internal nodes, by splitting m-1 nodes among k children.
unsigned long long count_trees(int k, int m, std::map<std::pair<int, int>, unsigned long long>& memo) {
    if (m == 0) return 1;
    auto key = std::make_pair(k, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // ways[c][r]: first c children use r nodes
    std::vector<std::vector<unsigned long long>> ways(k + 1, std::vector<unsigned long long>(m, 0));
    ways[0][0] = 1;
    for (int c = 1; c <= k; ++c)
        for (int r = 0; r < m; ++r)
            for (int s = 0; s <= r; ++s) ways[c][r] += ways[c - 1][r - s] * count_trees(k, s, memo);
    return memo[key] = ways[k][m - 1];
}

// Internal-node addresses of a tree, read off its leaves.
std::set<std::string> internal_addresses(const KTree& t) {
    std::set<std::string> out;
    for (const auto& a : t.leaf_addresses())
        for (std::size_t n = 0; n < a.size(); ++n) out.insert(a.digits.substr(0, n));
    return out;
}

}  // namespace

TEST(Tree, LeafAddressesOfSmallTrees) {
    EXPECT_EQ(addrs(KTree(3)), std::vector<std::string>{""});
    EXPECT_EQ(addrs(right_comb(3, 2)), (std::vector<std::string>{"0", "1", "20", "21", "22"}));
    EXPECT_EQ(addrs(right_comb(3, 1).expand_at(0)), (std::vector<std::string>{"00", "01", "02", "1", "2"}));
}

TEST(Tree, RightCombs) {
    EXPECT_TRUE(right_comb(3, 0).is_leaf());
    EXPECT_EQ(addrs(right_comb(2, 2)), (std::vector<std::string>{"0", "10", "11"}));
    EXPECT_EQ(right_comb(3, 1).expand_at(2), right_comb(3, 2));
    for (std::size_t m = 0; m < 6; ++m) EXPECT_TRUE(is_right_comb(right_comb(4, m)));
    EXPECT_FALSE(is_right_comb(right_comb(3, 1).expand_at(0)));
}

TEST(Tree, ExpandAtLeaf) {
    EXPECT_EQ(addrs(KTree(3).expand_at(0)), (std::vector<std::string>{"0", "1", "2"}));
    EXPECT_THROW(right_comb(3, 1).expand_at(3), IndexOutOfRange);
}

TEST(Tree, CollapseUndoesExpand) {
    for (std::size_t m = 0; m <= 3; ++m)
        for (const auto& t : enumerate_trees(3, m))
            for (std::size_t i = 0; i < t.leaf_count(); ++i) EXPECT_EQ(t.expand_at(i).collapse_caret(i), t);
}

TEST(Tree, LeafCountInvariantAndSortedPrefixFree) {
    for (int k = 2; k <= 4; ++k)
        for (std::size_t m = 0; m <= 4; ++m)
            for (const auto& t : enumerate_trees(k, m)) {
                EXPECT_EQ(t.leaf_count(), static_cast<std::size_t>(k - 1) * t.internal_count() + 1);
                auto a = t.leaf_addresses();
                for (std::size_t i = 1; i < a.size(); ++i) {
                    EXPECT_LT(a[i - 1], a[i]);
                    EXPECT_FALSE(a[i - 1].is_prefix_of(a[i]));
                }
                EXPECT_EQ(KTree::from_addresses(k, a), t);
                EXPECT_EQ(KTree::from_shape(k, t.shape()), t);
            }
}

TEST(Tree, EnumerationMatchesFussCatalanRecursion) {
    std::map<std::pair<int, int>, unsigned long long> memo;
    for (int k = 2; k <= 4; ++k)
        for (int m = 0; m <= 5; ++m)
            EXPECT_EQ(enumerate_trees(k, static_cast<std::size_t>(m)).size(), count_trees(k, m, memo))
                << "k=" << k << " m=" << m;
    EXPECT_EQ(enumerate_trees(3, 0).size(), 1u);
    EXPECT_EQ(enumerate_trees(3, 2).size(), 3u);
    EXPECT_EQ(enumerate_trees(3, 4).size(), 55u);
}

TEST(Tree, EnumerationIsSortedAndDistinct) {
    auto trees = enumerate_trees(3, 4);
    for (std::size_t i = 1; i < trees.size(); ++i) EXPECT_LT(trees[i - 1].leaf_addresses(), trees[i].leaf_addresses());
}

TEST(Tree, CommonRefinementOfEqualTrees) {
    auto t = right_comb(3, 1).expand_at(0);
    auto r = common_refinement(t, t);
    EXPECT_EQ(r.tree, t);
    EXPECT_TRUE(r.script_a.empty());
    EXPECT_TRUE(r.script_b.empty());

    auto r2 = common_refinement(KTree(3), right_comb(3, 1));
    EXPECT_EQ(r2.tree, right_comb(3, 1));
    EXPECT_EQ(r2.script_a.size(), 1u);
    EXPECT_TRUE(r2.script_b.empty());
}

TEST(Tree, CommonRefinementIsMinimalUnion) {
    auto all = enumerate_trees(3, 0);
    for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& t : enumerate_trees(3, m)) all.push_back(t);
    for (const auto& a : all)
        for (const auto& b : all) {
            auto r = common_refinement(a, b);
            EXPECT_EQ(a.apply(r.script_a), r.tree);
            EXPECT_EQ(b.apply(r.script_b), r.tree);
            auto want = internal_addresses(a);
            for (const auto& s : internal_addresses(b)) want.insert(s);
            EXPECT_EQ(internal_addresses(r.tree), want);
        }
}

TEST(Tree, CommonRefinementOfY0Trees) {
    KTree plus = right_comb(3, 1).expand_at(0);
    KTree minus = right_comb(3, 2);
    auto r = common_refinement(plus, minus);
    // union of the internal-node sets {"", "0"} and {"", "2"}
    EXPECT_EQ(addrs(r.tree), (std::vector<std::string>{"00", "01", "02", "1", "20", "21", "22"}));
}

TEST(Tree, ArityChecks) {
    EXPECT_THROW(common_refinement(KTree(2), KTree(3)), ArityMismatch);
    EXPECT_THROW(KTree(1), UnsupportedArity);
    EXPECT_THROW(KTree::from_addresses(3, {Address{"0"}, Address{"1"}}), Error);
    EXPECT_THROW(KTree::from_addresses(2, {Address{"0"}, Address{"2"}}), InvalidDigit);
}
