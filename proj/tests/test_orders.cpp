#include <gtest/gtest.h>

#include <random>

#include "gbcodes/error.hpp"
#include "gbcodes/orders.hpp"
#include "oracles.hpp"

using namespace gbcodes;

namespace {

Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int maxe = 2) {
  Monomial m(nvars);
  for (std::size_t v = 0; v < nvars; ++v) m.set(v, static_cast<std::uint8_t>(rng() % static_cast<unsigned>(maxe + 1)));
  return m;
}

Monomial mono(const VarLayout& lay, std::initializer_list<std::array<int, 3>> factors) {
  Monomial m(lay.count());
  for (auto [i, j, e] : factors) m.set(lay.var(i, j), static_cast<std::uint8_t>(e));
  return m;
}

}  // namespace

TEST(Orders, Axioms) {
  std::mt19937_64 rng(21);
  for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
    const std::size_t nv = 6;
    const Monomial one(nv);
    for (int t = 0; t < 2000; ++t) {
      const Monomial a = random_monomial(nv, rng), b = random_monomial(nv, rng), c = random_monomial(nv, rng);
      const auto ab = compare(o, a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, compare(o, b, a) > 0);
      EXPECT_EQ(compare(o, a * c, b * c), ab);
      if (!a.is_one()) EXPECT_TRUE(compare(o, a, one) > 0);
      if (a.degree() != b.degree()) EXPECT_EQ(ab < 0, a.degree() < b.degree());
      if (ab < 0 && compare(o, b, c) < 0) EXPECT_TRUE(compare(o, a, c) < 0);
    }
  }
}

TEST(Orders, VariableRanking) {
  const VarLayout lay{9, 3};
  for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
    EXPECT_TRUE(compare(o, mono(lay, {{1, 1, 1}}), mono(lay, {{1, 2, 1}})) > 0);
    EXPECT_TRUE(compare(o, mono(lay, {{1, 2, 1}}), mono(lay, {{2, 1, 1}})) > 0);
    EXPECT_TRUE(compare(o, mono(lay, {{1, 1, 1}, {8, 2, 1}}), mono(lay, {{6, 2, 1}})) > 0);
  }
  // Same degree, deglex and degrevlex disagree.
  const VarLayout l3{3, 2};
  const Monomial a = mono(l3, {{1, 1, 1}, {3, 1, 1}});
  const Monomial b = mono(l3, {{2, 1, 2}});
  EXPECT_TRUE(compare(OrderKind::deglex, a, b) > 0);
  EXPECT_TRUE(compare(OrderKind::degrevlex, a, b) < 0);
}

TEST(Orders, DeltaRoundTrip) {
  for (int q : {2, 3, 4, 5}) {
    const Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (const auto& w : oracle::all_words(f, 3)) {
      const Monomial m = delta(f, w);
      EXPECT_EQ(m.degree(), weight(w));
      EXPECT_TRUE(in_delta_image(m, q));
      EXPECT_EQ(delta_inverse(f, m), w);
    }
  }
  const VarLayout lay{2, 3};
  try {
    delta_inverse(Field::make(3), mono(lay, {{1, 1, 1}, {1, 2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInImage);
  }
}

TEST(Orders, DeltaOfDisjointSumIsProduct) {
  const Field f = Field::make(3);
  const Word a{1, 0, 2, 0}, b{0, 2, 0, 0};
  EXPECT_EQ(delta(f, add(f, a, b)), delta(f, a) * delta(f, b));
}

TEST(Orders, Render) {
  const VarLayout lay{9, 3};
  EXPECT_EQ(render(mono(lay, {{6, 2, 1}, {7, 2, 1}, {9, 2, 1}}), 3), "x_{6,2}x_{7,2}x_{9,2}");
  EXPECT_EQ(render(mono(lay, {{1, 1, 2}}), 3), "x_{1,1}^2");
  EXPECT_EQ(render(Monomial(lay.count()), 3), "1");
}

TEST(Orders, ParseOrder) {
  EXPECT_EQ(parse_order("deglex"), OrderKind::deglex);
  EXPECT_EQ(parse_order("degrevlex"), OrderKind::degrevlex);
  EXPECT_THROW(parse_order("lex"), Error);
}

TEST(Orders, MinusCompatibilityExhaustive) {
  for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex})
    for (int q : {2, 3}) {
      const OrderCheck c = check_minus_compatibility(o, Field::make(q), 4);
      EXPECT_TRUE(c.exhaustive());
      EXPECT_GT(c.tested, 0u);
      EXPECT_TRUE(c.holds()) << to_string(o) << " q=" << q;
    }
}

TEST(Orders, BlockDominance) {
  for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
    const OrderCheck c = check_block_dominance(o, Field::make(3), 5, 2);
    EXPECT_TRUE(c.exhaustive());
    EXPECT_TRUE(c.holds());
  }
  CheckBudget tiny;
  tiny.exhaustive_cap = 10;
  tiny.samples = 500;
  const OrderCheck s = check_block_dominance(OrderKind::degrevlex, Field::make(3), 30, 10, tiny);
  EXPECT_EQ(s.status, CheckStatus::sampled_true);
}
