#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gbcodes {

/// Integer code of a field element: 0 is zero, prime-field elements are their
/// residues, extension-field elements are sum(c_i * p^i) over the polynomial
/// coefficients modulo the field's modulus.
using Elem = std::uint8_t;

/// GF(p^s) with q <= 16, backed by full addition and multiplication tables.
///
/// The primitive element alpha is the smallest generator by integer code.
/// Discrete logs follow the exponent range [1, q-1]: alpha^(q-1) = 1, so
/// dlog(1) == q-1 and never 0.
///
/// Field is a cheap handle to immutable shared tables.
class Field {
 public:
  /// `modulus` lists the coefficients c_0..c_s of a degree-s polynomial over
  /// GF(p), lowest degree first. Empty selects the default modulus: the monic
  /// irreducible polynomial with the smallest code sum(c_i p^i), i < s.
  static Field make(int p, int s = 1, std::vector<int> modulus = {});

  int p() const noexcept { return t_->p; }
  int s() const noexcept { return t_->s; }
  int q() const noexcept { return t_->q; }
  const std::vector<int>& modulus() const noexcept { return t_->modulus; }
  Elem alpha() const noexcept { return t_->alpha; }

  Elem add(Elem a, Elem b) const { return t_->add[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return t_->mul[idx(a, b)]; }
  Elem neg(Elem a) const { return t_->neg[check(a)]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Exponent j in [1, q-1] with alpha^j == a.
  int dlog(Elem a) const;
  /// alpha^j for any integer j (taken modulo q-1).
  Elem alpha_pow(long long j) const;

  /// Maps an integer code (0..q-1) to an element, validating the range.
  Elem element(int code) const;

  /// Residue for prime fields, "a^j" (or "0") for extension fields.
  std::string format(Elem a) const;
  /// Accepts an integer code, or "a^j" / "0" / "1" strings.
  Elem parse(const std::string& text) const;

  bool operator==(const Field& other) const noexcept;
  bool operator!=(const Field& other) const noexcept { return !(*this == other); }

 private:
  struct Tables {
    int p = 0;
    int s = 0;
    int q = 0;
    std::vector<int> modulus;
    Elem alpha = 0;
    std::vector<Elem> add, mul, neg;
    std::vector<Elem> exp;  // exp[j] = alpha^j, j in 0..q-1 (exp[0] == exp[q-1])
    std::vector<int> log;   // log[a] in [1, q-1] for a != 0
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  Elem check(Elem a) const;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(check(a)) * static_cast<std::size_t>(t_->q) + check(b);
  }

  std::shared_ptr<const Tables> t_;
};

bool is_prime(int p) noexcept;

/// True iff the polynomial (coefficients low to high) has no factor of
/// degree 1..deg/2 over GF(p). Exhaustive trial division.
bool is_irreducible(int p, const std::vector<int>& coeffs);

}  // namespace gbcodes
