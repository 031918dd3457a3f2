#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordcalc/generators.hpp"
#include "ordcalc/tree_size.hpp"
#include "test_helpers.hpp"

using namespace ordcalc;
using ordcalc::test::O;

namespace {

const Ordinal w = Ordinal::omega();

TreeDesc leaf() { return TreeDesc{}; }

TreeDesc over(const TreeDesc& t, Cardinal k) { return TreeDesc{{TreeChild{t, k}}}; }

TreeDesc star() { return over(leaf(), Cardinal::aleph(0)); }

TreeDesc nested_star() { return over(star(), Cardinal::aleph(0)); }

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(leaf()), Ordinal());
  EXPECT_EQ(rank(star()), Ordinal(1));
  EXPECT_EQ(rank(nested_star()), Ordinal(2));
}

TEST(Size, Examples) {
  EXPECT_EQ(size(over(over(leaf(), 1), 1)), Ordinal(3));  // path
  EXPECT_EQ(size(over(leaf(), 2)), Ordinal(3));           // cherry
  EXPECT_EQ(size(star()), O("w + 1"));
  EXPECT_EQ(size(nested_star()), O("w^2 + 1"));
  EXPECT_EQ(size(leaf()), Ordinal(1));
}

TEST(ForestSize, Examples) {
  EXPECT_EQ(forest_size(Forest{TreeChild{leaf(), 2}}), Ordinal(2));
  EXPECT_EQ(forest_size(Forest{TreeChild{leaf(), Cardinal::aleph(0)}}), w);
  EXPECT_EQ(forest_size(Forest{TreeChild{nested_star(), 1}}), size(nested_star()));
  EXPECT_THROW(forest_size(Forest{TreeChild{leaf(), Cardinal::aleph(1)}}), DomainError);
}

TEST(Size, MixedMultiplicities) {
  // Root over: 2 copies of an ℵ₀-star, ℵ₀ copies of a 3-cherry, one leaf.
  TreeDesc t;
  t.children.push_back(TreeChild{star(), 2});
  t.children.push_back(TreeChild{over(leaf(), 3), Cardinal::aleph(0)});
  t.children.push_back(TreeChild{leaf(), 1});
  // ⊎{ω+1, ω+1, 4×ℵ₀, 1}: ξ = 1, survivors cut at 1 give ω·2, plus ω.
  EXPECT_EQ(size(t), O("w*3 + 1"));
  EXPECT_EQ(extension_order_type(t), size(t));
}

TEST(Extension, Examples) {
  EXPECT_EQ(extension_order_type(leaf()), Ordinal(1));
  EXPECT_EQ(extension_order_type(star()), O("w + 1"));
  EXPECT_EQ(extension_order_type(nested_star()), O("w^2 + 1"));
  EXPECT_EQ(extension_order_type(over(over(leaf(), 1), 4)), Ordinal(9));
}

TEST(TruncateTree, Examples) {
  EXPECT_EQ(truncate_tree(star(), 3).children.size(), 1u);
  EXPECT_EQ(node_count(truncate_tree(star(), 3)), Natural(4));
  const TreeDesc f = over(over(leaf(), 2), 3);
  EXPECT_EQ(node_count(truncate_tree(f, 5)), node_count(f));
  EXPECT_EQ(node_count(truncate_tree(nested_star(), 2)), Natural(7));
  EXPECT_TRUE(is_finite_tree(truncate_tree(nested_star(), 2)));
  EXPECT_THROW(truncate_tree(star(), 0), DomainError);
}

TEST(Validation, Rejections) {
  EXPECT_THROW(size(over(leaf(), Cardinal::aleph(1))), DomainError);
  EXPECT_THROW(size(over(leaf(), 0)), DomainError);
  EXPECT_THROW(node_count(star()), DomainError);
}

TEST(FiniteTrees, SizeIsNodeCount) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const TreeDesc t = random_finite_tree(rng, 200);
    const auto flat = oracle::flatten(t);
    EXPECT_EQ(Natural(flat.parent.size()), node_count(t));
    EXPECT_EQ(size(t), Ordinal(node_count(t)));
    EXPECT_EQ(extension_order_type(t), size(t));
  }
}

TEST(FiniteTrees, BruteForceExtensions) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const TreeDesc t = random_finite_tree(rng, 7);
    const auto flat = oracle::flatten(t);
    const auto all = oracle::linear_extensions(flat);
    EXPECT_EQ(Natural(all.size()), oracle::hook_length_count(flat));
    for (const auto& order : all) {
      EXPECT_TRUE(oracle::is_downward_finite_extension(flat, order));
      // A linear order on n points has order type n.
      EXPECT_EQ(Ordinal(Natural(order.size())), size(t));
    }
  }
}

TEST(InfiniteTrees, ExtensionTruncationAndRank) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const TreeDesc t = random_tree(rng, 3);
    const Ordinal sigma = size(t);
    EXPECT_EQ(extension_order_type(t), sigma);
    EXPECT_LE(ord_add(rank(t), 1), sigma);
    Ordinal previous;
    for (int n = 1; n <= 6; ++n) {
      const Ordinal cur = size(truncate_tree(t, n));
      EXPECT_LE(previous, cur);
      EXPECT_LE(cur, sigma);
      previous = cur;
    }
  }
}
