#include <gtest/gtest.h>

#include <set>

#include "gbcodes/counterexample.hpp"
#include "gbcodes/error.hpp"
#include "oracles.hpp"

using namespace gbcodes;

namespace {

Field field_q(int q) { return q == 4 ? Field::make(2, 2) : Field::make(q); }

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Counterexample, ExampleSeeds) {
  for (int q : {3, 4, 5}) {
    const SeedCode s = example_seed(field_q(q));
    EXPECT_EQ(s.d2, 2 * q + 2);
    EXPECT_EQ(s.r, q);
    EXPECT_EQ(static_cast<int>(s.I.size()), 2 * q);
    EXPECT_EQ(static_cast<int>(s.J.size()), 2 * q);
    EXPECT_EQ(s.d2, oracle::ghw_by_shortening(s.dprime, 2));
    const auto want = oracle::m1_m2_naive(s.dprime, OrderKind::degrevlex);
    EXPECT_EQ(s.c1p, want.m1);
    EXPECT_EQ(s.c2p, want.m2);
  }
}

TEST(Counterexample, TernarySeedIsRebased) {
  const SeedCode s = example_seed(Field::make(3));
  EXPECT_TRUE(s.rebased);
  EXPECT_EQ(s.c1p, (Word{0, 0, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(s.c2p, (Word{1, 1, 0, 2, 0, 2, 1, 1}));
}

TEST(Counterexample, SeedHypothesesRejectBinaryAndSmallIntersections) {
  EXPECT_THROW(example_seed(Field::make(2)), Error);
  const LinearCode low = LinearCode::from_generator(Field::make(3), {{1, 1, 0, 0}, {0, 0, 1, 1}});
  try {
    make_seed(low, OrderKind::degrevlex);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisFailed);
  }
}

TEST(Counterexample, WordsPAreCompleteAndDescending) {
  const SeedCode s = example_seed(Field::make(3));
  const auto P = seed_words_p(s);
  EXPECT_EQ(static_cast<long long>(P.size()), binom(8, 3) * 8);
  const std::set<Word> distinct(P.begin(), P.end());
  EXPECT_EQ(distinct.size(), P.size());
  for (std::size_t i = 1; i < P.size(); ++i)
    EXPECT_TRUE(word_compare(OrderKind::degrevlex, s.dprime.field(), P[i - 1], P[i]) > 0);
  for (const auto& u : P) EXPECT_EQ(weight(u), s.r);
}

TEST(Counterexample, FullBuildShape) {
  const SeedCode s = example_seed(Field::make(3));
  CheckBudget b;
  b.samples = 2000;
  const CounterexampleCode cc = build_counterexample(s, 448, b);
  EXPECT_EQ(cc.ell, 448u);
  EXPECT_EQ(cc.n, 1352);
  EXPECT_EQ(cc.k, 450);
  EXPECT_EQ(cc.m, 8);
  EXPECT_EQ(cc.dominance.status, CheckStatus::sampled_true);
  const Word r = cc.row(3);
  EXPECT_EQ(r[8 + 2 * 3], 2);
  EXPECT_EQ(r[8 + 3 * 3 - 1], 2);
  EXPECT_EQ(weight(r), 2 * s.r);
}

TEST(Counterexample, TruncationRange) {
  const SeedCode s = example_seed(Field::make(3));
  for (int t : {0, 449}) {
    try {
      build_counterexample(s, t);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::TruncationOutOfRange);
    }
  }
}

TEST(Counterexample, MinimalPlaneSmallTruncations) {
  const SeedCode s = example_seed(Field::make(3));
  for (int t = 1; t <= 3; ++t) {
    const CounterexampleCode cc = build_counterexample(s, t);
    const MinimalPlaneCheck p = verify_minimal_plane(cc);
    EXPECT_EQ(p.status, Verdict::verified) << "t=" << t;
    EXPECT_EQ(p.d2, 8);
    EXPECT_EQ(p.minimizers, 1u);
    EXPECT_EQ(p.d2, oracle::ghw_by_shortening(cc.code(), 2));
  }
}

TEST(Counterexample, Mechanism) {
  for (int q : {3, 4}) {
    const MechanismCheck m = verify_mechanism(example_seed(field_q(q)));
    EXPECT_TRUE(m.leads_dominate);
    EXPECT_TRUE(m.p_complete);
    EXPECT_TRUE(m.plane_weights);
    EXPECT_FALSE(m.witness.has_value());
    EXPECT_EQ(m.status, Verdict::verified);
  }
}

TEST(Counterexample, GbTierFirstTruncation) {
  const CounterexampleCode cc = build_counterexample(example_seed(Field::make(3)), 1);
  const GbTierCheck g = verify_gb_tier(cc);
  EXPECT_EQ(g.gb_size, 1472u);
  EXPECT_EQ(g.mg_size, 18u);
  EXPECT_TRUE(g.mg_is_test_set);
}

TEST(Counterexample, SearchFindsNothingBelowSix) {
  const SeedSearch r = search_seed(Field::make(3), 5);
  EXPECT_FALSE(r.seed.has_value());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_GT(r.trials, 0u);
}
