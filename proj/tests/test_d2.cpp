#include <gtest/gtest.h>

#include <random>

#include "gbcodes/d2.hpp"
#include "gbcodes/error.hpp"
#include "oracles.hpp"

using namespace gbcodes;

namespace {

LinearCode ternary_9_3() {
  return LinearCode::from_generator(Field::make(3),
                                    {{1, 0, 0, 0, 0, 1, 0, 2, 0}, {0, 1, 0, 0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 2, 2, 1, 1, 0}});
}

LinearCode ternary_8_2() {
  return LinearCode::from_generator(Field::make(3), {{1, 1, 1, 2, 1, 2, 0, 0}, {0, 0, 1, 1, 1, 1, 1, 1}});
}

}  // namespace

TEST(D2, TernaryNineThree) {
  const D2Report r = analyze_d2(ternary_9_3(), OrderKind::degrevlex);
  EXPECT_EQ(r.m1, (Word{2, 0, 0, 0, 0, 2, 0, 1, 0}));
  EXPECT_EQ(r.m2, (Word{0, 1, 0, 0, 1, 1, 1, 0, 1}));
  EXPECT_EQ(r.I, (std::vector<int>{1, 6, 8}));
  EXPECT_EQ(r.J, (std::vector<int>{2, 5, 6, 7, 9}));
  EXPECT_EQ(r.d2, 7);
  EXPECT_EQ(r.intersection, 1);
  EXPECT_TRUE(r.intersection_bound);
  EXPECT_TRUE(r.minus_compatible.holds());
}

TEST(D2, TernaryNineThreeMgCheck) {
  const MgTestSetCheck c = check_mg_test_set(ternary_9_3(), OrderKind::degrevlex);
  EXPECT_EQ(c.status, Verdict::verified) << c.reason;
  EXPECT_EQ(c.gb_size, 457u);
  ASSERT_TRUE(c.f.has_value());
  ASSERT_TRUE(c.g.has_value());
}

TEST(D2, TernaryEightTwoBoundary) {
  const IntersectionBoundCheck p = check_intersection_bound(ternary_8_2(), OrderKind::degrevlex);
  EXPECT_EQ(p.intersection, 4);
  EXPECT_EQ(p.size_i, 6);
  EXPECT_EQ(p.size_j, 6);
  EXPECT_TRUE(p.holds);
  const MgTestSetCheck c = check_mg_test_set(ternary_8_2(), OrderKind::degrevlex);
  EXPECT_EQ(c.status, Verdict::silent);
  EXPECT_FALSE(c.report.intersection_bound);
}

TEST(D2, M1M2MatchNaiveDefinition) {
  std::mt19937_64 rng(41);
  const std::vector<Field> fields{Field::make(2), Field::make(3), Field::make(2, 2)};
  for (int t = 0; t < 24; ++t) {
    const Field& f = fields[static_cast<std::size_t>(t) % 3];
    const LinearCode c = oracle::random_code(f, 4 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2), rng);
    for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
      const M1M2 got = compute_m1_m2(c, o);
      const oracle::M1M2 want = oracle::m1_m2_naive(c, o);
      EXPECT_EQ(got.m1, want.m1);
      EXPECT_EQ(got.m2, want.m2);
    }
  }
}

TEST(D2, StructuralInvariantsHoldOnRandomCodes) {
  std::mt19937_64 rng(42);
  const std::vector<Field> fields{Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5)};
  for (int t = 0; t < 80; ++t) {
    const Field& f = fields[static_cast<std::size_t>(t) % fields.size()];
    const LinearCode c = oracle::random_code(f, 4 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 2), rng);
    CheckBudget budget;
    budget.exhaustive_cap = 100'000;
    budget.samples = 1000;
    for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
      const D2Report r = analyze_d2(c, o, {}, budget);
      const auto minimal = minimal_support_codewords(c);
      EXPECT_TRUE(std::binary_search(minimal.begin(), minimal.end(), r.m1));
      EXPECT_TRUE(std::binary_search(minimal.begin(), minimal.end(), r.m2));
      EXPECT_EQ(r.d2, oracle::ghw_by_shortening(c, 2));
    }
  }
}

TEST(D2, TestSetPredicate) {
  const LinearCode c = ternary_9_3();
  const auto minimal = minimal_support_codewords(c);
  EXPECT_TRUE(is_d2_test_set(c, minimal).is_test_set);
  const D2Report r = analyze_d2(c, OrderKind::degrevlex);
  const TestSetResult t = is_d2_test_set(c, {r.m1, r.m2});
  EXPECT_TRUE(t.is_test_set);
  EXPECT_FALSE(is_d2_test_set(c, {r.m1}).is_test_set);
  Word not_minimal = add(c.field(), r.m1, r.m2);
  for (const auto& w : enumerate(c))
    if (!std::binary_search(minimal.begin(), minimal.end(), w) && !is_zero(w)) not_minimal = w;
  try {
    is_d2_test_set(c, {not_minimal});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMinimalSupport);
  }
}

TEST(D2, DimensionTooSmall) {
  const LinearCode c = LinearCode::from_generator(Field::make(2), {{1, 1, 1}});
  try {
    compute_m1_m2(c, OrderKind::degrevlex);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionTooSmall);
  }
}

TEST(D2, BinaryIntersectionBound) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    const LinearCode c = oracle::random_code(Field::make(2), 5 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 2), rng);
    const D2Report r = analyze_d2(c, OrderKind::degrevlex);
    EXPECT_LE(2 * r.intersection, static_cast<int>(r.I.size()));
    EXPECT_EQ(check_mg_test_set(c, OrderKind::degrevlex).status, Verdict::verified);
  }
}
