#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gbcodes/error.hpp"
#include "gbcodes/groebner.hpp"
#include "oracles.hpp"

using namespace gbcodes;

namespace {

LinearCode ternary_9_3() {
  return LinearCode::from_generator(Field::make(3),
                                    {{1, 0, 0, 0, 0, 1, 0, 2, 0}, {0, 1, 0, 0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 2, 2, 1, 1, 0}});
}

std::vector<LinearCode> corpus(int count, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LinearCode> out;
  const std::vector<Field> fields{Field::make(2), Field::make(3), Field::make(2, 2)};
  for (int t = 0; t < count; ++t) {
    const Field& f = fields[static_cast<std::size_t>(t) % fields.size()];
    const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(nmax - 2));
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, n - 1)));
    out.push_back(oracle::random_code(f, n, k, rng));
  }
  return out;
}

std::set<std::string> texts(const GroebnerBasis& gb) {
  std::set<std::string> s;
  for (const auto& b : gb.elements())
    s.insert(render(b.lead, gb.field().q()) + " - " + render(b.trail, gb.field().q()));
  return s;
}

}  // namespace

TEST(Groebner, TernaryNineThreeCounts) {
  const GroebnerBasis gb = reduced_gb(ternary_9_3(), OrderKind::degrevlex);
  EXPECT_EQ(gb.size(), 457u);
  EXPECT_EQ(gb.standard_count(), 729u);
  int rx = 0;
  for (const auto& c : classify(gb)) rx += c.tag == ElementClass::rx;
  EXPECT_EQ(rx, 27);
  const auto t = texts(gb);
  EXPECT_TRUE(t.count("x_{1,1}x_{8,2} - x_{6,2}"));
  EXPECT_TRUE(t.count("x_{6,2}x_{7,2}x_{9,2} - x_{2,1}x_{5,1}"));
}

TEST(Groebner, DeglexShapeViolationOnTernaryNineThree) {
  const GroebnerBasis gb = reduced_gb(ternary_9_3(), OrderKind::deglex);
  EXPECT_EQ(texts(gb).count("x_{4,2}x_{7,1}x_{8,2}x_{9,2} - x_{2,1}x_{3,1}"), 1u);
  try {
    classify(gb);
    FAIL() << "expected a shape violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeViolation);
    EXPECT_NE(std::string(e.what()).find("x_{4,2}x_{7,1}x_{8,2}x_{9,2}"), std::string::npos);
  }
}

TEST(Groebner, TraversalsAgree) {
  for (const auto& c : corpus(40, 8, 31))
    for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
      const GroebnerBasis a = reduced_gb(c, o, {}, Traversal::frontier_heap);
      const GroebnerBasis b = reduced_gb(c, o, {}, Traversal::degree_by_degree);
      EXPECT_EQ(a.elements(), b.elements());
    }
}

TEST(Groebner, SoundReducedAndStandardCount) {
  for (const auto& c : corpus(40, 8, 32)) {
    const GroebnerBasis gb = reduced_gb(c, OrderKind::degrevlex);
    std::uint64_t cosets = 1;
    for (int i = 0; i < c.n() - c.k(); ++i) cosets *= static_cast<std::uint64_t>(c.q());
    EXPECT_EQ(gb.standard_count(), cosets);
    for (const auto& b : gb.elements()) {
      EXPECT_TRUE(compare(OrderKind::degrevlex, b.lead, b.trail) > 0);
      EXPECT_TRUE(c.contains(sub(c.field(), evaluate(c.field(), b.lead), evaluate(c.field(), b.trail))));
      EXPECT_TRUE(gb.is_standard(b.trail));
      EXPECT_EQ(gb.canonical_form(b.lead), b.trail);
    }
    EXPECT_TRUE(oracle::is_reduced(gb));
  }
}

TEST(Groebner, CompletenessOracleSmall) {
  for (const auto& c : corpus(30, 5, 33)) {
    if (c.q() > 3) continue;
    for (OrderKind o : {OrderKind::deglex, OrderKind::degrevlex}) {
      const GroebnerBasis gb = reduced_gb(c, o);
      EXPECT_GE(oracle::gb_completeness(gb), 0) << "n=" << c.n() << " q=" << c.q();
    }
  }
}

TEST(Groebner, SupportIdentityAndShape) {
  for (const auto& c : corpus(40, 8, 34)) {
    const GroebnerBasis gb = reduced_gb(c, OrderKind::degrevlex);
    const auto classes = classify(gb);
    for (std::size_t e = 0; e < classes.size(); ++e) {
      if (classes[e].tag != ElementClass::codeword) continue;
      const Binomial& b = gb.elements()[e];
      const Word a = delta_inverse(c.field(), b.lead);
      const Word t = delta_inverse(c.field(), b.trail);
      EXPECT_EQ(support_mask(classes[e].codeword), support_mask(a) | support_mask(t));
      EXPECT_EQ(classes[e].codeword, associated_codeword(c.field(), b));
    }
  }
}

TEST(Groebner, RxElementsAreSingleBlock) {
  const GroebnerBasis gb = reduced_gb(ternary_9_3(), OrderKind::degrevlex);
  const VarLayout lay{9, 3};
  for (const auto& b : gb.elements()) {
    if (!is_zero(sub(gb.field(), evaluate(gb.field(), b.lead), evaluate(gb.field(), b.trail)))) continue;
    std::set<int> blocks;
    for (std::size_t v = 0; v < lay.count(); ++v)
      if (b.lead[v] || b.trail[v]) blocks.insert(lay.coords(v).first);
    EXPECT_EQ(blocks.size(), 1u);
    EXPECT_THROW(associated_codeword(gb.field(), b), Error);
  }
}

TEST(Groebner, CanonicalFormOfFieldRelation) {
  const GroebnerBasis gb = reduced_gb(ternary_9_3(), OrderKind::degrevlex);
  const VarLayout lay{9, 3};
  Monomial m(lay.count());
  m.set(lay.var(1, 1), 1);
  m.set(lay.var(1, 2), 1);
  EXPECT_TRUE(gb.canonical_form(m).is_one());
  EXPECT_TRUE(gb.is_standard(Monomial(lay.count())));
}

TEST(Groebner, MgHasMinimumWeightWord) {
  for (const auto& c : corpus(30, 8, 35)) {
    const MgResult r = compute_mg(c, OrderKind::degrevlex);
    int d1 = c.n();
    for (const auto& w : r.minimal) d1 = std::min(d1, weight(w));
    bool found = false;
    for (const auto& w : r.mg) found = found || weight(w) == d1;
    EXPECT_TRUE(found);
    for (const auto& w : r.mg) EXPECT_TRUE(std::binary_search(r.minimal.begin(), r.minimal.end(), w));
  }
}

TEST(Groebner, CosetCap) {
  Caps caps;
  caps.cosets = 100;
  try {
    reduced_gb(ternary_9_3(), OrderKind::degrevlex, caps);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}
