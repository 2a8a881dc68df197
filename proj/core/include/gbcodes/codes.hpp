#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gbcodes/gf.hpp"
#include "gbcodes/parallel.hpp"

namespace gbcodes {

using Word = std::vector<Elem>;

/// Bitmask of a support; bit i is coordinate i (0-based). Brute-force kernels
/// that use masks require n <= 64.
using SupportMask = std::uint64_t;

int weight(std::span<const Elem> w) noexcept;
/// 0-based indices of the nonzero coordinates, ascending.
std::vector<int> support(std::span<const Elem> w);
SupportMask support_mask(std::span<const Elem> w);
bool is_zero(std::span<const Elem> w) noexcept;

Word add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Word sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Word scale(const Field& f, Elem lambda, std::span<const Elem> a);

/// True iff b is a scalar multiple of a (a nonzero).
bool in_line(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

struct Echelon {
  std::vector<Word> rows;   // reduced row echelon form, pivots normalized to 1
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(const Field& f, std::vector<Word> rows);
int rank(const Field& f, std::vector<Word> rows);

/// k-dimensional subspace of GF(q)^n with its generator and parity-check
/// matrices. Immutable after construction.
class LinearCode {
 public:
  /// Builds the code spanned by `rows`. Dependent rows raise DependentRows
  /// unless `accept_reduced`, in which case a maximal independent prefix-greedy
  /// subset of the rows is kept.
  static LinearCode from_generator(Field field, std::vector<Word> rows, bool accept_reduced = false);

  const Field& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int q() const noexcept { return field_.q(); }
  const std::vector<Word>& generator() const noexcept { return g_; }
  const std::vector<Word>& parity_check() const noexcept { return h_; }

  /// q^k, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept;

  /// Codeword sum_r info[r] * G_r.
  Word encode(std::span<const Elem> info) const;
  /// Codeword for the information vector whose base-q digits (least
  /// significant first) are the coefficients of G's rows.
  Word encode_index(std::uint64_t index) const;

  Word syndrome(std::span<const Elem> w) const;
  bool contains(std::span<const Elem> w) const;

 private:
  LinearCode(Field f, int n, std::vector<Word> g, std::vector<Word> h)
      : field_(std::move(f)), n_(n), k_(static_cast<int>(g.size())), g_(std::move(g)), h_(std::move(h)) {}

  Field field_;
  int n_;
  int k_;
  std::vector<Word> g_;
  std::vector<Word> h_;
};

/// All q^k codewords, index i holding encode_index(i).
std::vector<Word> enumerate(const LinearCode& code, const Caps& caps = {});

struct GhwResult {
  int value = 0;
  std::uint64_t subspaces = 0;         // number of i-dimensional subspaces scanned
  std::uint64_t attaining = 0;         // subspaces of weight == value
  std::vector<std::vector<Word>> witnesses;  // RREF-derived bases, at most 100, sorted
};

/// d_i(C) by enumerating every i-dimensional subspace once through its
/// canonical RREF coefficient matrix.
GhwResult ghw_detail(const LinearCode& code, int i, const Caps& caps = {});
inline int ghw(const LinearCode& code, int i, const Caps& caps = {}) { return ghw_detail(code, i, caps).value; }

/// Number of i-dimensional subspaces of GF(q)^k (Gaussian binomial), saturating.
std::uint64_t gaussian_binomial(int k, int i, int q);

/// d_2 by scanning all unordered codeword pairs spanning a plane. Independent
/// of the RREF route; used as the cross-check oracle.
int d2_by_pairs(const LinearCode& code, const Caps& caps = {});

/// M(C): nonzero codewords whose support properly contains no other nonzero
/// codeword's support. Sorted lexicographically.
std::vector<Word> minimal_support_codewords(const LinearCode& code, const Caps& caps = {});

struct Span2 {
  int dim = 0;     // 1 or 2
  int weight = 0;  // |supp(c1) u supp(c2)|
};

Span2 span2_weight(const Field& f, std::span<const Elem> c1, std::span<const Elem> c2);

}  // namespace gbcodes
