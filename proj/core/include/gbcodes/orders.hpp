#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gbcodes/codes.hpp"
#include "gbcodes/gf.hpp"

namespace gbcodes {

/// Variables x_{i,j}, i in [n], j in [q-1], serialized so that a smaller
/// index means a larger variable: x_{1,1} > x_{1,2} > ... > x_{n,q-1}.
struct VarLayout {
  int n = 0;
  int q = 2;

  std::size_t count() const noexcept { return static_cast<std::size_t>(n) * static_cast<std::size_t>(q - 1); }
  /// 1-based (i, j) to variable index.
  std::size_t var(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(q - 1) + static_cast<std::size_t>(j - 1);
  }
  /// Variable index to 1-based (i, j).
  std::pair<int, int> coords(std::size_t v) const noexcept {
    return {static_cast<int>(v / static_cast<std::size_t>(q - 1)) + 1,
            static_cast<int>(v % static_cast<std::size_t>(q - 1)) + 1};
  }
};

/// Monomial in the n(q-1) block variables, stored densely by variable index.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}

  std::size_t nvars() const noexcept { return exp_.size(); }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::uint8_t operator[](std::size_t v) const { return exp_[v]; }
  const std::vector<std::uint8_t>& exponents() const noexcept { return exp_; }

  void set(std::size_t v, std::uint8_t e) {
    degree_ += static_cast<int>(e) - static_cast<int>(exp_[v]);
    exp_[v] = e;
  }
  void inc(std::size_t v) {
    ++exp_[v];
    ++degree_;
  }
  void dec(std::size_t v) {
    --exp_[v];
    --degree_;
  }

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept { return exp_ == other.exp_; }

 private:
  std::vector<std::uint8_t> exp_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { deglex, degrevlex };

std::string to_string(OrderKind kind);
OrderKind parse_order(const std::string& name);

/// Square-free monomial with x_{i,j} present iff w_i = alpha^j.
Monomial delta(const Field& f, std::span<const Elem> w);
/// Inverse of delta; NotInImage unless m has at most one variable of exponent
/// one per block.
Word delta_inverse(const Field& f, const Monomial& m);
bool in_delta_image(const Monomial& m, int q) noexcept;

/// Degree-compatible comparison with the fixed variable ranking.
std::strong_ordering compare(OrderKind order, const Monomial& a, const Monomial& b);

/// a < b iff delta(a) < delta(b).
std::strong_ordering word_compare(OrderKind order, const Field& f, std::span<const Elem> a, std::span<const Elem> b);

struct WordLess {
  OrderKind order;
  const Field* field;
  bool operator()(const Word& a, const Word& b) const { return word_compare(order, *field, a, b) < 0; }
};

/// "x_{i,j}" factors from the largest variable down, "^e" for powers, "1" for
/// the unit monomial.
std::string render(const Monomial& m, int q);

enum class CheckStatus { exhaustive_true, exhaustive_false, sampled_true, sampled_false };

std::string to_string(CheckStatus s);

struct OrderCheck {
  CheckStatus status = CheckStatus::exhaustive_true;
  std::uint64_t tested = 0;
  std::optional<std::pair<Word, Word>> witness;

  bool holds() const noexcept {
    return status == CheckStatus::exhaustive_true || status == CheckStatus::sampled_true;
  }
  bool exhaustive() const noexcept {
    return status == CheckStatus::exhaustive_true || status == CheckStatus::exhaustive_false;
  }
};

struct CheckBudget {
  std::uint64_t exhaustive_cap = 20'000'000;  // pairs
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
};

/// For all a, b in GF(q)^n with disjoint supports: delta(b) < delta(a)
/// implies delta(-b) < delta(-a). Exhaustive when (2q-1)^n pairs fit the
/// budget, sampled otherwise.
OrderCheck check_minus_compatibility(OrderKind order, const Field& f, int n, const CheckBudget& budget = {});

/// For all u, v in GF(q)^n with w(u) = w(v) > 0, supp(u) in [m] and
/// supp(v) disjoint from [m]: delta(u) > delta(v).
OrderCheck check_block_dominance(OrderKind order, const Field& f, int n, int m, const CheckBudget& budget = {});

}  // namespace gbcodes
