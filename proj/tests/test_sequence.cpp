#include <gtest/gtest.h>

#include "ordcalc/random.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/transfinite_sum.hpp"
#include "test_helpers.hpp"

using namespace ordcalc;
using ordcalc::test::O;

namespace {

const Ordinal w = Ordinal::omega();
const Ordinal w1 = Ordinal::atom(1);

}  // namespace

TEST(SeqLength, Examples) {
  EXPECT_EQ(seq_length(SeqDesc{}), Ordinal());
  EXPECT_EQ(seq_length(SeqDesc{{Explicit{{1, w}}}}), Ordinal(2));
  EXPECT_EQ(seq_length(SeqDesc{{Repeat{1, w1}, Repeat{w1, w}}}), O("w1 + w"));
}

TEST(ValueAt, Examples) {
  EXPECT_EQ(value_at(SeqDesc{{Explicit{{0, 1}}}}, Position{0, 1}), Ordinal(1));
  EXPECT_EQ(value_at(SeqDesc{{Repeat{w1, w}}}, Position{0, 5}), w1);
  EXPECT_EQ(value_at(SeqDesc{{Explicit{{w}}, Repeat{1, w}}}, Position{1, 3}), Ordinal(1));
  EXPECT_THROW(value_at(SeqDesc{{Explicit{{w}}}}, Position{0, 1}), DomainError);
  EXPECT_THROW(value_at(SeqDesc{{Explicit{{w}}}}, Position{1, 0}), DomainError);
}

TEST(Positions, IndexRoundTrip) {
  const SeqDesc s{{Explicit{{1, 2}}, Repeat{w, O("w^2 + 3")}, Explicit{{5}}}};
  for (const auto& gamma : {O("0"), O("1"), O("2"), O("w"), O("w^2 + 1"), O("w^2 + 3")}) {
    EXPECT_EQ(index_of(s, position_of(s, gamma)), gamma) << print_ordinal(gamma);
  }
  EXPECT_EQ(position_of(s, O("w^2 + 3")), (Position{2, 0}));
  EXPECT_EQ(position_of(s, O("w^2 + 2")), (Position{1, O("w^2 + 2")}));
  EXPECT_THROW(position_of(s, O("w^2 + 4")), DomainError);
}

TEST(SplitAt, Examples) {
  auto [p1, s1] = split_at(SeqDesc{{Repeat{1, w}}}, 1);
  EXPECT_EQ(p1, (SeqDesc{{Explicit{{1}}}}));
  EXPECT_EQ(s1, (SeqDesc{{Repeat{1, w}}}));

  auto [p2, s2] = split_at(SeqDesc{{Repeat{1, w1}, Repeat{w1, w}}}, w1);
  EXPECT_EQ(p2, (SeqDesc{{Repeat{1, w1}}}));
  EXPECT_EQ(s2, (SeqDesc{{Repeat{w1, w}}}));

  auto [p3, s3] = split_at(SeqDesc{{Explicit{{w, 1, w}}}}, 2);
  EXPECT_EQ(p3, (SeqDesc{{Explicit{{w, 1}}}}));
  EXPECT_EQ(s3, (SeqDesc{{Explicit{{w}}}}));

  EXPECT_THROW(split_at(SeqDesc{{Explicit{{w}}}}, 2), DomainError);
}

TEST(SplitAt, TransfiniteCutInsideRun) {
  auto [p, s] = split_at(SeqDesc{{Repeat{2, O("w^2")}}}, O("w*3 + 1"));
  EXPECT_EQ(p, (SeqDesc{{Repeat{2, O("w*3 + 1")}}}));
  EXPECT_EQ(s, (SeqDesc{{Repeat{2, O("w^2")}}}));
}

TEST(SplitAt, LengthsAddUp) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    const Ordinal delta = random_split_point(rng, s);
    const auto [prefix, suffix] = split_at(s, delta);
    EXPECT_EQ(seq_length(prefix), delta);
    EXPECT_EQ(ord_add(seq_length(prefix), seq_length(suffix)), seq_length(s));
  }
}

TEST(NonzeroSubsequence, Examples) {
  EXPECT_EQ(nonzero_subsequence(SeqDesc{{Explicit{{0, 1, 0, w}}}}), (SeqDesc{{Explicit{{1, w}}}}));
  EXPECT_EQ(nonzero_subsequence(SeqDesc{{Repeat{0, w}, Explicit{{1}}}}), (SeqDesc{{Explicit{{1}}}}));
  EXPECT_EQ(nonzero_subsequence(SeqDesc{{Repeat{1, w}}}), (SeqDesc{{Repeat{1, w}}}));
}

TEST(NonzeroSubsequence, PreservesNaturalSum) {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    EXPECT_EQ(iter_nat_sum(nonzero_subsequence(s)), iter_nat_sum(s));
  }
}

TEST(EventuallyZero, Examples) {
  EXPECT_TRUE(is_eventually_zero(SeqDesc{{Repeat{1, w}, Repeat{0, w}}}));
  EXPECT_FALSE(is_eventually_zero(SeqDesc{{Repeat{1, w}}}));
  EXPECT_TRUE(is_eventually_zero(SeqDesc{{Explicit{{w, 0}}}}));
  EXPECT_FALSE(is_eventually_zero(SeqDesc{{Repeat{1, w}, Explicit{}}}));
  EXPECT_TRUE(is_eventually_zero(SeqDesc{{Repeat{1, w}, Explicit{{0}}, Repeat{0, w}}}));
  EXPECT_FALSE(is_eventually_zero(SeqDesc{{Repeat{0, w}, Repeat{3, w1}}}));
}

TEST(Components, Examples) {
  EXPECT_TRUE(same_component(O("w+2"), 0, 3));
  EXPECT_FALSE(same_component(O("w+2"), 3, w));
  EXPECT_TRUE(same_component(O("w*2"), w, O("w+7")));
  EXPECT_EQ(component_of(O("w+2"), O("w+1")).end, O("w+2"));
  EXPECT_EQ(component_of(O("w^2"), O("w*3+4")).start, O("w*3"));
}

TEST(StepSets, ValidationAndMembership) {
  const SeqDesc s{{Explicit{{1, 2}}, Repeat{w, O("w*2 + 2")}}};
  EXPECT_NO_THROW(validate(s, StepSet::selected({{0, 1}, {1, 3}, {1, O("w*2 + 1")}})));
  EXPECT_THROW(validate(s, StepSet::selected({{1, O("w + 1")}})), DomainError);
  EXPECT_THROW(validate(s, StepSet::selected({{0, 2}})), DomainError);
  EXPECT_THROW(validate(SeqDesc{{Repeat{1, 0}}}), DomainError);
  const auto g = StepSet::selected({{1, 3}});
  EXPECT_TRUE(is_natural_step(g, 1, 3));
  EXPECT_FALSE(is_natural_step(g, 1, 2));
}

TEST(StepSets, SplitKeepsMeaning) {
  const SeqDesc s{{Explicit{{1, 2, 3}}, Repeat{w, w}}};
  const auto [before, after] = split_steps(s, StepSet::selected({{0, 0}, {0, 2}, {1, 4}}), 2);
  EXPECT_EQ(before.natural_steps.size(), 1u);
  ASSERT_EQ(after.natural_steps.size(), 2u);
  EXPECT_EQ(after.natural_steps[0], (Position{0, 0}));
  EXPECT_EQ(after.natural_steps[1], (Position{1, 4}));
}
