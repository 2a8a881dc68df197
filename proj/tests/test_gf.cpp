#include <gtest/gtest.h>

#include <set>

#include "gbcodes/error.hpp"
#include "gbcodes/gf.hpp"

using namespace gbcodes;

namespace {

const std::vector<std::pair<int, int>> kFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                  {3, 2}, {11, 1}, {13, 1}, {2, 4}};

// Schoolbook product of the coefficient vectors behind two codes, reduced by
// the field's modulus.
int poly_mul(const Field& f, int a, int b) {
  const int p = f.p(), s = f.s();
  std::vector<int> x(s), y(s), z(2 * s, 0);
  for (int i = 0; i < s; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& mod = f.modulus();
  for (int d = 2 * s - 1; d >= s; --d) {
    const int c = z[d];
    if (c == 0) continue;
    for (int i = 0; i <= s; ++i) z[d - s + i] = ((z[d - s + i] - c * mod[i]) % p + p) % p;
  }
  int out = 0;
  for (int i = s - 1; i >= 0; --i) out = out * p + z[i];
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST(Field, AxiomsOnEverySupportedField) {
  for (auto [p, s] : kFields) {
    const Field f = Field::make(p, s);
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
      const auto ea = static_cast<Elem>(a);
      EXPECT_EQ(f.add(ea, 0), ea);
      EXPECT_EQ(f.mul(ea, 1), ea);
      EXPECT_EQ(f.add(ea, f.neg(ea)), 0);
      if (a != 0) EXPECT_EQ(f.mul(ea, f.inv(ea)), 1);
      for (int b = 0; b < q; ++b) {
        const auto eb = static_cast<Elem>(b);
        EXPECT_EQ(f.add(ea, eb), f.add(eb, ea));
        EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
        EXPECT_EQ(f.mul(ea, eb), poly_mul(f, a, b)) << "q=" << q << " " << a << "*" << b;
        for (int c = 0; c < q; ++c) {
          const auto ec = static_cast<Elem>(c);
          EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
        }
      }
    }
  }
}

TEST(Field, AlphaIsSmallestGenerator) {
  for (auto [p, s] : kFields) {
    const Field f = Field::make(p, s);
    const int q = f.q();
    for (int g = 1; g < q; ++g) {
      std::set<int> seen;
      Elem x = 1;
      for (int j = 0; j < q - 1; ++j) {
        x = f.mul(x, static_cast<Elem>(g));
        seen.insert(x);
      }
      if (static_cast<int>(seen.size()) == q - 1) {
        EXPECT_EQ(f.alpha(), g) << "q=" << q;
        break;
      }
    }
  }
}

TEST(Field, DlogRange) {
  for (auto [p, s] : kFields) {
    const Field f = Field::make(p, s);
    EXPECT_EQ(f.dlog(1), f.q() - 1);
    for (int a = 1; a < f.q(); ++a) {
      const int j = f.dlog(static_cast<Elem>(a));
      EXPECT_GE(j, 1);
      EXPECT_LE(j, f.q() - 1);
      EXPECT_EQ(f.alpha_pow(j), a);
    }
    EXPECT_EQ(f.alpha_pow(0), 1);
    EXPECT_EQ(f.alpha_pow(-1), f.inv(f.alpha()));
  }
}

TEST(Field, DefaultModuli) {
  EXPECT_EQ(Field::make(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(Field::make(2, 3).modulus(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(Field::make(2, 4).modulus(), (std::vector<int>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field::make(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(Field::make(3).alpha(), 2);
  EXPECT_EQ(Field::make(5).alpha(), 2);
  EXPECT_EQ(Field::make(7).alpha(), 3);
}

TEST(Field, ExplicitModulusGivesDifferentField) {
  const Field a = Field::make(2, 3);
  const Field b = Field::make(2, 3, {1, 0, 1, 1});
  EXPECT_NE(a, b);
  EXPECT_EQ(b, Field::make(2, 3, {1, 0, 1, 1}));
}

TEST(Field, ParseAndFormat) {
  const Field f = Field::make(2, 2);
  for (int a = 0; a < 4; ++a) EXPECT_EQ(f.parse(f.format(static_cast<Elem>(a))), a);
  EXPECT_EQ(f.parse("a^1"), f.alpha());
  EXPECT_EQ(f.parse("2"), 2);
  const Field g = Field::make(5);
  EXPECT_EQ(g.format(4), "4");
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { Field::make(4); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { Field::make(17); }), Errc::FieldTooLarge);
  EXPECT_EQ(code_of([] { Field::make(2, 5); }), Errc::FieldTooLarge);
  EXPECT_EQ(code_of([] { Field::make(2, 2, {1, 0, 1}); }), Errc::ReducibleModulus);
  const Field f = Field::make(3);
  EXPECT_EQ(code_of([&] { f.inv(0); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { f.dlog(0); }), Errc::ZeroHasNoLog);
  EXPECT_EQ(code_of([&] { f.element(3); }), Errc::InvalidElement);
  EXPECT_EQ(code_of([&] { f.add(3, 0); }), Errc::InvalidElement);
  EXPECT_EQ(code_of([&] { f.parse("b^2"); }), Errc::InvalidElement);
}

TEST(Field, Irreducibility) {
  EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));
  EXPECT_TRUE(is_irreducible(3, {1, 0, 1}));
  EXPECT_FALSE(is_irreducible(3, {2, 0, 1}));
}
