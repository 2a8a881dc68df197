#include "gbcodes/gf.hpp"

#include <algorithm>
#include <sstream>

#include "gbcodes/error.hpp"

namespace gbcodes {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoPrimitiveElement: return "NoPrimitiveElement";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroHasNoLog: return "ZeroHasNoLog";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DependentRows: return "DependentRows";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadIndex: return "BadIndex";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotInImage: return "NotInImage";
    case Errc::FrontierOverflow: return "FrontierOverflow";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::RxElement: return "RxElement";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NotMinimalSupport: return "NotMinimalSupport";
    case Errc::TooFewGenerators: return "TooFewGenerators";
    case Errc::InvalidIdeal: return "InvalidIdeal";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::OrderNotCompatible: return "OrderNotCompatible";
    case Errc::TruncationOutOfRange: return "TruncationOutOfRange";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Falsified: return "Falsified";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  const int lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const int factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly from_code(int code, int p, int s) {
  Poly c(static_cast<std::size_t>(s), 0);
  for (int i = 0; i < s; ++i) {
    c[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return c;
}

int to_code(const Poly& c, int p) {
  int code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& coeffs) {
  Poly f = coeffs;
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = from_code(code, p, d);
      g.push_back(1);  // monic divisor of degree d
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(int p, int s, std::vector<int> modulus) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (s < 1) fail(Errc::InvalidInput, "field degree s must be positive");
  int q = 1;
  for (int i = 0; i < s; ++i) {
    q *= p;
    if (q > 16) fail(Errc::FieldTooLarge, "only fields with q <= 16 are supported");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->s = s;
  t->q = q;

  if (s > 1) {
    if (modulus.empty()) {
      int count = q;  // monic polynomials of degree s
      for (int code = 0; code < count; ++code) {
        Poly cand = from_code(code, p, s);
        cand.push_back(1);
        if (is_irreducible(p, cand)) {
          modulus = cand;
          break;
        }
      }
    } else {
      for (auto& c : modulus) c = ((c % p) + p) % p;
      trim(modulus);
      if (static_cast<int>(modulus.size()) != s + 1)
        fail(Errc::ReducibleModulus, "modulus must have degree s");
      if (!is_irreducible(p, modulus))
        fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
      const int li = inv_mod(modulus.back(), p);
      for (auto& c : modulus) c = c * li % p;
    }
    t->modulus = modulus;
  } else if (!modulus.empty()) {
    fail(Errc::InvalidInput, "prime fields take no modulus");
  }

  const auto qq = static_cast<std::size_t>(q);
  t->add.resize(qq * qq);
  t->mul.resize(qq * qq);
  t->neg.resize(qq);
  for (int a = 0; a < q; ++a) {
    const Poly pa = from_code(a, p, s);
    for (int b = 0; b < q; ++b) {
      const Poly pb = from_code(b, p, s);
      Poly sum(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) sum[i] = (pa[i] + pb[i]) % p;
      Poly prod(static_cast<std::size_t>(2 * s), 0);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (s > 1) prod = poly_mod(prod, t->modulus, p);
      prod.resize(static_cast<std::size_t>(s), 0);
      t->add[a * qq + b] = static_cast<Elem>(to_code(sum, p));
      t->mul[a * qq + b] = static_cast<Elem>(to_code(prod, p));
    }
    Poly na = pa;
    for (auto& c : na) c = (p - c) % p;
    t->neg[a] = static_cast<Elem>(to_code(na, p));
  }

  // Smallest generator of the multiplicative group.
  for (int g = 1; g < q && t->alpha == 0; ++g) {
    std::vector<bool> seen(qq, false);
    int x = g;
    int order = 0;
    do {
      if (seen[x]) break;
      seen[x] = true;
      ++order;
      x = t->mul[x * qq + g];
    } while (x != g);
    if (order == q - 1) t->alpha = static_cast<Elem>(g);
  }
  if (t->alpha == 0) fail(Errc::NoPrimitiveElement, "no primitive element found");

  t->exp.assign(qq, 0);
  t->log.assign(qq, 0);
  Elem x = 1;
  for (int j = 1; j < q; ++j) {
    x = t->mul[x * qq + t->alpha];
    t->exp[j] = x;
    t->log[x] = j;
  }
  t->exp[0] = t->exp[q - 1];
  if (t->exp[q - 1] != 1) fail(Errc::Internal, "alpha^(q-1) != 1");
  return Field(std::move(t));
}

Elem Field::check(Elem a) const {
  if (a >= t_->q) fail(Errc::InvalidElement, "element code out of range");
  return a;
}

Elem Field::inv(Elem a) const {
  if (check(a) == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
}

int Field::dlog(Elem a) const {
  if (check(a) == 0) fail(Errc::ZeroHasNoLog, "zero has no discrete log");
  return t_->log[a];
}

Elem Field::alpha_pow(long long j) const {
  const long long m = t_->q - 1;
  return t_->exp[static_cast<std::size_t>(((j % m) + m) % m)];
}

Elem Field::element(int code) const {
  if (code < 0 || code >= t_->q) fail(Errc::InvalidElement, "element code " + std::to_string(code) + " out of range");
  return static_cast<Elem>(code);
}

std::string Field::format(Elem a) const {
  check(a);
  if (t_->s == 1 || a == 0) return std::to_string(a);
  return "a^" + std::to_string(t_->log[a]);
}

Elem Field::parse(const std::string& text) const {
  if (text.size() > 2 && (text[0] == 'a' || text[0] == 'A') && text[1] == '^') {
    long long j = 0;
    try {
      j = std::stoll(text.substr(2));
    } catch (const std::exception&) {
      fail(Errc::InvalidElement, "cannot parse element '" + text + "'");
    }
    return alpha_pow(j);
  }
  if (text == "a" || text == "A") return t_->alpha;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return element(v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::InvalidElement, "cannot parse element '" + text + "'");
  }
}

bool Field::operator==(const Field& other) const noexcept {
  return t_ == other.t_ ||
         (t_->p == other.t_->p && t_->s == other.t_->s && t_->modulus == other.t_->modulus);
}

}  // namespace gbcodes
