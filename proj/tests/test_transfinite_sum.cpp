#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ordcalc/random.hpp"
#include "ordcalc/transfinite_sum.hpp"
#include "repeat_oracle.hpp"
#include "test_helpers.hpp"

using namespace ordcalc;
using ordcalc::test::O;

namespace {

const Ordinal w = Ordinal::omega();
const Ordinal w1 = Ordinal::atom(1);

SeqDesc seq(std::vector<Segment> segments) { return SeqDesc{std::move(segments)}; }

}  // namespace

TEST(IterNatSum, Examples) {
  EXPECT_EQ(iter_nat_sum(seq({Repeat{1, w}})), w);
  EXPECT_EQ(iter_nat_sum(seq({Explicit{{0}}, Repeat{1, w}, Explicit{{1}}})), O("w + 1"));
  EXPECT_EQ(iter_nat_sum(seq({Repeat{O("w + 1"), w}})), O("w^2"));
  EXPECT_EQ(iter_nat_sum(seq({Repeat{1, w1}, Repeat{w1, w}})), O("w1*w"));
  EXPECT_EQ(iter_nat_sum(seq({Repeat{w1, w}, Repeat{1, w1}})), O("w1*(w + 1)"));
  EXPECT_EQ(iter_nat_sum(SeqDesc{}), Ordinal());
}

TEST(IterNatSum, FiniteRunsMatchStepwiseFold) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Ordinal v = random_ordinal(rng, OrdinalSpec{1, 4, 3, 3, 0});
    const auto n = static_cast<unsigned>(rng.between(1, 8));
    Ordinal acc;
    for (unsigned k = 0; k < n; ++k) acc = oracle::nat_add(acc, v);
    EXPECT_EQ(iter_nat_sum(seq({Repeat{v, Ordinal(Natural(n))}})), acc);
  }
}

TEST(IterOrdSum, Examples) {
  EXPECT_EQ(iter_ord_sum(seq({Explicit{{1}}, Repeat{1, w}})), w);
  EXPECT_EQ(iter_ord_sum(seq({Repeat{1, w}})), w);
  EXPECT_EQ(iter_ord_sum(seq({Repeat{O("w + 1"), w}})), O("w^2"));
}

TEST(IterOrdSum, FiniteTruncationsMatchStepwiseFold) {
  // (ω+1)·n by literal addition, against the run of length n.
  const Ordinal v = O("w + 1");
  Ordinal acc;
  for (unsigned n = 1; n <= 12; ++n) {
    acc = oracle::ord_add(acc, v);
    EXPECT_EQ(iter_ord_sum(seq({Repeat{v, Ordinal(Natural(n))}})), acc);
  }
}

TEST(PartialSums, Examples) {
  EXPECT_EQ(partial_nat_sum(seq({Repeat{1, w}}), 3), Ordinal(3));
  EXPECT_EQ(partial_nat_sum(seq({Repeat{1, w1}, Repeat{w1, w}}), w1), w1);
  EXPECT_EQ(partial_nat_sum(seq({Repeat{1, w}}), 0), Ordinal());
  EXPECT_THROW(partial_nat_sum(seq({Repeat{1, w}}), O("w + 1")), DomainError);
}

TEST(RangeSums, Examples) {
  const SeqDesc remark = seq({Explicit{{0}}, Repeat{1, w}, Explicit{{1}}});
  // The last value sits at index w, so [1, w+1) is 1, 1, ...; 1.
  EXPECT_EQ(range_nat_sum(remark, 1, O("w + 1")), O("w + 1"));
  EXPECT_EQ(range_nat_sum(remark, 1, w), w);
  EXPECT_EQ(range_nat_sum(remark, w, w), Ordinal());
  EXPECT_EQ(range_nat_sum(seq({Repeat{1, w1}, Repeat{w1, w}}), w1, O("w1 + w")), O("w1*w"));
  EXPECT_THROW(range_nat_sum(remark, 2, 1), DomainError);
}

TEST(GSum, Examples) {
  const SeqDesc two = seq({Explicit{{1, w}}});
  EXPECT_EQ(g_sum(two, StepSet::selected({Position{0, 1}})), O("w + 1"));
  EXPECT_EQ(g_sum(two, StepSet::all_ordinary()), w);
  EXPECT_EQ(g_sum(two, StepSet::all_natural()), iter_nat_sum(two));
}

TEST(GSum, AllNaturalAndAllOrdinaryMatchTheFolds) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    EXPECT_EQ(g_sum(s, StepSet::all_natural()), iter_nat_sum(s));
    EXPECT_EQ(g_sum(s, StepSet::all_ordinary()), iter_ord_sum(s));
  }
}

TEST(GSum, RejectsSelectionInsideInfinitePart) {
  const SeqDesc s = seq({Repeat{1, O("w*2 + 2")}});
  EXPECT_NO_THROW(g_sum(s, StepSet::selected({Position{0, O("w*2")}, Position{0, O("w*2 + 1")}})));
  EXPECT_NO_THROW(g_sum(s, StepSet::selected({Position{0, 3}})));
  EXPECT_THROW(g_sum(s, StepSet::selected({Position{0, w}})), DomainError);
  EXPECT_THROW(g_sum(s, StepSet::selected({Position{0, O("w + 5")}})), DomainError);
  EXPECT_THROW(g_sum(s, StepSet::selected({Position{0, O("w*2 + 2")}})), DomainError);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(g_sum_spectrum(seq({Explicit{{1, w}}})), (std::vector<Ordinal>{w, O("w + 1")}));
  EXPECT_EQ(g_sum_spectrum(seq({Repeat{1, w}})), (std::vector<Ordinal>{w}));
  EXPECT_EQ(g_sum_spectrum(seq({Explicit{{w, 1, w}}})), (std::vector<Ordinal>{O("w*2"), O("w*2 + 1")}));
}

TEST(Spectrum, MatchesBruteForceOnExplicitSequences) {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    std::vector<Ordinal> values;
    const auto n = rng.below(9);
    for (std::uint64_t k = 0; k < n; ++k) values.push_back(random_ordinal(rng, OrdinalSpec{1, 3, 2, 2, 0}));
    const auto brute = oracle::brute_force_spectrum(values);
    const auto got = g_sum_spectrum(seq({Explicit{values}}));
    EXPECT_EQ(got, std::vector<Ordinal>(brute.begin(), brute.end()));
  }
}

TEST(Spectrum, EndsAreTheTwoFolds) {
  Rng rng(29);
  SequenceSpec spec;
  spec.length_top = 2;
  for (int i = 0; i < 100; ++i) {
    const SeqDesc s = random_sequence(rng, spec);
    if (spectrum_candidates(s).size() > 12) continue;
    const auto values = g_sum_spectrum(s);
    EXPECT_TRUE(std::is_sorted(values.begin(), values.end()));
    EXPECT_EQ(values.front(), iter_ord_sum(s));
    EXPECT_EQ(values.back(), iter_nat_sum(s));
  }
}

TEST(TailCharacter, Examples) {
  auto t1 = tail_character(seq({Repeat{1, w}}));
  EXPECT_EQ(t1.gamma_bar, Ordinal());
  EXPECT_EQ(t1.xi, Ordinal(1));

  auto t2 = tail_character(seq({Repeat{1, w1}, Repeat{w1, w}}));
  EXPECT_EQ(t2.gamma_bar, Ordinal());
  EXPECT_EQ(t2.xi, O("w1 + 1"));

  auto t3 = tail_character(seq({Explicit{{O("w^2")}}, Repeat{1, w}}));
  EXPECT_EQ(t3.gamma_bar, Ordinal(1));
  EXPECT_EQ(t3.xi, Ordinal(1));
}

TEST(TailCharacter, Preconditions) {
  EXPECT_THROW(tail_character(seq({Explicit{{1}}})), DomainError);
  EXPECT_THROW(tail_character(seq({Repeat{1, w}, Explicit{{1}}})), DomainError);
  EXPECT_THROW(tail_character(seq({Repeat{1, w}, Repeat{0, w}})), DomainError);
}

TEST(Properties, DominanceAndZeroRemoval) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    EXPECT_LE(iter_ord_sum(s), iter_nat_sum(s));
    EXPECT_EQ(iter_nat_sum(nonzero_subsequence(s)), iter_nat_sum(s));
  }
}

TEST(Properties, PrefixMonotonicity) {
  Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    const Ordinal zeta = seq_length(s);
    const Ordinal delta = random_split_point(rng, s);
    const Ordinal part = partial_nat_sum(s, delta);
    const Ordinal total = iter_nat_sum(s);
    EXPECT_LE(part, total);
    // Equality exactly when the dropped tail is all zero.
    const bool tail_zero = nonzero_subsequence(slice(s, delta, zeta)).segments.empty();
    EXPECT_EQ(part == total, tail_zero);
  }
}

TEST(Properties, PointwiseMonotonicity) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc a = random_sequence(rng, SequenceSpec{});
    // Lower every value to a truncation of itself.
    SeqDesc b = a;
    for (auto& seg : b.segments) {
      if (auto* e = std::get_if<Explicit>(&seg)) {
        for (auto& v : e->values) v = rng.chance(1, 2) ? Ordinal() : truncate(v, 1);
      } else {
        auto& r = std::get<Repeat>(seg);
        if (rng.chance(1, 3)) r.value = truncate(r.value, 1);
      }
    }
    EXPECT_LE(iter_nat_sum(b), iter_nat_sum(a));
    EXPECT_LE(iter_ord_sum(b), iter_ord_sum(a));
  }
}

TEST(Properties, PickingLemma) {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const SeqDesc s = random_sequence(rng, SequenceSpec{});
    const Ordinal delta = random_split_point(rng, s);
    const auto points = supported_split_points(s);
    Ordinal picked = partial_nat_sum(s, delta);
    std::vector<Ordinal> later;
    for (const auto& p : points) {
      if (!(p < delta)) later.push_back(p);
    }
    rng.shuffle(later);
    const std::size_t k = std::min<std::size_t>(later.size(), rng.below(4));
    for (std::size_t j = 0; j < k; ++j) picked = nat_add(picked, value_at(s, position_of(s, later[j])));
    EXPECT_LE(picked, iter_nat_sum(s));
  }
}

TEST(RepeatRule, OracleGrid) {
  for (const auto& alpha : {O("1"), O("w"), O("w + 1"), O("w^2 + w"), O("w^2*2 + 3")}) {
    for (unsigned eta = 1; eta <= 3; ++eta) {
      for (unsigned copies = 1; copies <= 2; ++copies) {
        for (const auto& prefix : {O("0"), O("w^4 + w"), O("5")}) {
          const auto v = oracle::check_repeat_rule(oracle::RepeatCase{prefix, alpha, eta, copies}, 3, 6);
          EXPECT_TRUE(v.ok) << v.message;
        }
      }
    }
  }
}
