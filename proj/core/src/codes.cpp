#include "gbcodes/codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>

#include "gbcodes/error.hpp"

namespace gbcodes {

int weight(std::span<const Elem> w) noexcept {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Elem e) { return e != 0; }));
}

std::vector<int> support(std::span<const Elem> w) {
  std::vector<int> s;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

SupportMask support_mask(std::span<const Elem> w) {
  if (w.size() > 64) fail(Errc::TooLarge, "support masks need n <= 64");
  SupportMask m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) m |= SupportMask{1} << i;
  return m;
}

bool is_zero(std::span<const Elem> w) noexcept {
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

Word add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "word lengths differ");
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Word sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "word lengths differ");
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Word scale(const Field& f, Elem lambda, std::span<const Elem> a) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(lambda, a[i]);
  return r;
}

bool in_line(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "word lengths differ");
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == 0) ++lead;
  if (lead == a.size()) fail(Errc::ZeroInput, "in_line needs a nonzero base word");
  const Elem lambda = f.div(b[lead], a[lead]);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (f.mul(lambda, a[i]) != b[i]) return false;
  return true;
}

Echelon rref(const Field& f, std::vector<Word> rows) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Elem inv = f.inv(rows[r][col]);
    for (auto& e : rows[r]) e = f.mul(inv, e);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const Elem factor = rows[o][col];
      for (std::size_t c = 0; c < n; ++c) rows[o][c] = f.sub(rows[o][c], f.mul(factor, rows[r][c]));
    }
    out.pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank(const Field& f, std::vector<Word> rows) {
  return static_cast<int>(rref(f, std::move(rows)).pivots.size());
}

LinearCode LinearCode::from_generator(Field field, std::vector<Word> rows, bool accept_reduced) {
  if (rows.empty()) fail(Errc::EmptyCode, "generator matrix has no rows");
  const std::size_t n = rows.front().size();
  if (n == 0) fail(Errc::EmptyCode, "code length is zero");
  for (const auto& row : rows) {
    if (row.size() != n) fail(Errc::LengthMismatch, "generator rows differ in length");
    for (Elem e : row)
      if (e >= field.q()) fail(Errc::InvalidElement, "generator entry out of field range");
  }

  const int full_rank = rank(field, rows);
  if (full_rank == 0) fail(Errc::EmptyCode, "generator matrix spans the zero code");
  if (full_rank < static_cast<int>(rows.size())) {
    if (!accept_reduced)
      fail(Errc::DependentRows, "generator rows are dependent; reduced rank is " + std::to_string(full_rank));
    std::vector<Word> kept;
    for (auto& row : rows) {
      kept.push_back(row);
      if (rank(field, kept) < static_cast<int>(kept.size())) kept.pop_back();
    }
    rows = std::move(kept);
  }

  // Parity check: one row per non-pivot column f, h_f = 1, h_{p_r} = -R[r][f].
  const Echelon e = rref(field, rows);
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Word> h;
  for (std::size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Word hr(n, 0);
    hr[col] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      hr[static_cast<std::size_t>(e.pivots[r])] = field.neg(e.rows[r][col]);
    h.push_back(std::move(hr));
  }

  LinearCode code(std::move(field), static_cast<int>(n), std::move(rows), std::move(h));
  for (const auto& g : code.g_)
    if (!is_zero(code.syndrome(g))) fail(Errc::Internal, "G * H^T != 0");
  return code;
}

std::uint64_t LinearCode::size() const noexcept {
  std::uint64_t s = 1;
  for (int i = 0; i < k_; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q()))
      return std::numeric_limits<std::uint64_t>::max();
    s *= static_cast<std::uint64_t>(q());
  }
  return s;
}

Word LinearCode::encode(std::span<const Elem> info) const {
  if (info.size() != static_cast<std::size_t>(k_)) fail(Errc::LengthMismatch, "information vector length != k");
  Word w(static_cast<std::size_t>(n_), 0);
  for (int r = 0; r < k_; ++r) {
    if (info[r] == 0) continue;
    for (int c = 0; c < n_; ++c) w[c] = field_.add(w[c], field_.mul(info[r], g_[r][c]));
  }
  return w;
}

Word LinearCode::encode_index(std::uint64_t index) const {
  Word info(static_cast<std::size_t>(k_));
  for (int r = 0; r < k_; ++r) {
    info[r] = static_cast<Elem>(index % static_cast<std::uint64_t>(q()));
    index /= static_cast<std::uint64_t>(q());
  }
  return encode(info);
}

Word LinearCode::syndrome(std::span<const Elem> w) const {
  if (w.size() != static_cast<std::size_t>(n_)) fail(Errc::LengthMismatch, "word length != n");
  Word s(h_.size(), 0);
  for (std::size_t r = 0; r < h_.size(); ++r) {
    Elem acc = 0;
    for (int c = 0; c < n_; ++c)
      if (w[c] != 0 && h_[r][c] != 0) acc = field_.add(acc, field_.mul(w[c], h_[r][c]));
    s[r] = acc;
  }
  return s;
}

bool LinearCode::contains(std::span<const Elem> w) const { return is_zero(syndrome(w)); }

std::vector<Word> enumerate(const LinearCode& code, const Caps& caps) {
  const std::uint64_t total = code.size();
  if (total > caps.enumeration)
    fail(Errc::TooLarge, "q^k = " + std::to_string(total) + " exceeds the enumeration cap");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(total));
  // Odometer over information digits (element codes); when digit r moves
  // from d to d', the word changes by (d' - d) * G_r.
  const int q = code.q();
  const int k = code.k();
  const auto& f = code.field();
  std::vector<Elem> digits(static_cast<std::size_t>(k), 0);
  Word w(static_cast<std::size_t>(code.n()), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    words.push_back(w);
    for (int r = 0; r < k; ++r) {
      const auto& g = code.generator()[r];
      const Elem old = digits[r];
      const Elem next = static_cast<Elem>(old + 1 == q ? 0 : old + 1);
      digits[r] = next;
      const Elem delta = f.sub(next, old);
      for (int c = 0; c < code.n(); ++c) w[c] = f.add(w[c], f.mul(delta, g[c]));
      if (next != 0) break;
    }
  }
  return words;
}

std::uint64_t gaussian_binomial(int k, int i, int q) {
  if (i < 0 || i > k) return 0;
  // prod_{j<i} (q^k - q^j) / (q^i - q^j), exact in long double for our sizes,
  // but computed in integers by accumulating the ratio stepwise.
  unsigned __int128 num = 1, den = 1;
  auto pw = [q](int e) {
    unsigned __int128 v = 1;
    for (int t = 0; t < e; ++t) v *= static_cast<unsigned>(q);
    return v;
  };
  for (int j = 0; j < i; ++j) {
    num *= pw(k) - pw(j);
    den *= pw(i) - pw(j);
    if (num > (static_cast<unsigned __int128>(1) << 120)) return std::numeric_limits<std::uint64_t>::max();
  }
  const unsigned __int128 v = num / den;
  if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(v);
}

GhwResult ghw_detail(const LinearCode& code, int i, const Caps& caps) {
  const int k = code.k();
  if (i < 1 || i > k) fail(Errc::BadIndex, "ghw index must lie in 1..k");
  if (code.n() > 64) fail(Errc::TooLarge, "brute-force GHW needs n <= 64");
  const std::uint64_t count = gaussian_binomial(k, i, code.q());
  if (count > caps.pair_evals) fail(Errc::TooLarge, "too many " + std::to_string(i) + "-dimensional subspaces");

  const auto words = enumerate(code, caps);
  std::vector<SupportMask> masks(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) masks[w] = support_mask(words[w]);

  const auto q = static_cast<std::uint64_t>(code.q());
  std::vector<std::uint64_t> qpow(static_cast<std::size_t>(k) + 1, 1);
  for (int e = 1; e <= k; ++e) qpow[e] = qpow[e - 1] * q;

  GhwResult res;
  res.value = code.n() + 1;
  std::vector<std::vector<std::uint64_t>> best;  // row indices of witnesses

  std::vector<int> piv(static_cast<std::size_t>(i));
  for (int r = 0; r < i; ++r) piv[r] = r;
  while (true) {
    // free slots: (row r, column c) with c > piv[r] and c not a pivot
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < i; ++r)
      for (int c = piv[r] + 1; c < k; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
    std::vector<std::uint64_t> digit(slots.size(), 0);
    while (true) {
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(i));
      for (int r = 0; r < i; ++r) rows[r] = qpow[piv[r]];
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first] += digit[s] * qpow[slots[s].second];
      SupportMask u = 0;
      for (auto idx : rows) u |= masks[idx];
      const int w = std::popcount(u);
      ++res.subspaces;
      if (w < res.value) {
        res.value = w;
        res.attaining = 0;
        best.clear();
      }
      if (w == res.value) {
        ++res.attaining;
        if (best.size() < 100) best.push_back(rows);
      }

      std::size_t s = 0;
      while (s < slots.size() && ++digit[s] == q) digit[s++] = 0;
      if (s == slots.size()) break;
    }
    // next pivot combination
    int r = i - 1;
    while (r >= 0 && piv[r] == k - i + r) --r;
    if (r < 0) break;
    ++piv[r];
    for (int t = r + 1; t < i; ++t) piv[t] = piv[t - 1] + 1;
  }

  for (const auto& rows : best) {
    std::vector<Word> basis;
    for (auto idx : rows) basis.push_back(words[idx]);
    res.witnesses.push_back(std::move(basis));
  }
  std::sort(res.witnesses.begin(), res.witnesses.end());
  return res;
}

int d2_by_pairs(const LinearCode& code, const Caps& caps) {
  if (code.k() < 2) fail(Errc::DimensionTooSmall, "d2 needs k >= 2");
  const auto words = enumerate(code, caps);
  const std::size_t m = words.size();
  if (static_cast<long double>(m) * m / 2 > static_cast<long double>(caps.pair_evals))
    fail(Errc::TooLarge, "too many codeword pairs");
  std::vector<SupportMask> masks(m);
  for (std::size_t w = 0; w < m; ++w) masks[w] = support_mask(words[w]);
  const auto& f = code.field();

  const unsigned workers = resolve_workers(caps.workers);
  std::vector<int> best(workers, code.n() + 1);
  parallel_chunks(m, workers, [&](std::size_t b, std::size_t e, unsigned wid) {
    int local = code.n() + 1;
    for (std::size_t a = std::max<std::size_t>(b, 1); a < e; ++a) {
      for (std::size_t c = a + 1; c < m; ++c) {
        const int w = std::popcount(masks[a] | masks[c]);
        if (w >= local) continue;
        if (in_line(f, words[a], words[c])) continue;
        local = w;
      }
    }
    best[wid] = std::min(best[wid], local);
  });
  return *std::min_element(best.begin(), best.end());
}

std::vector<Word> minimal_support_codewords(const LinearCode& code, const Caps& caps) {
  const auto words = enumerate(code, caps);
  std::vector<SupportMask> masks;
  masks.reserve(words.size());
  for (std::size_t w = 1; w < words.size(); ++w) masks.push_back(support_mask(words[w]));
  std::vector<SupportMask> uniq = masks;
  std::sort(uniq.begin(), uniq.end(), [](SupportMask a, SupportMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<SupportMask> minimal;
  for (SupportMask s : uniq) {
    bool contains_other = false;
    for (SupportMask t : minimal) {
      if ((t & s) == t && t != s) {
        contains_other = true;
        break;
      }
    }
    // uniq is sorted by cardinality, so any proper subset that is a support
    // either is minimal itself or contains a minimal one: checking against the
    // minimal list suffices.
    if (!contains_other) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());

  std::vector<Word> out;
  for (std::size_t w = 1; w < words.size(); ++w)
    if (std::binary_search(minimal.begin(), minimal.end(), masks[w - 1])) out.push_back(words[w]);
  std::sort(out.begin(), out.end());
  return out;
}

Span2 span2_weight(const Field& f, std::span<const Elem> c1, std::span<const Elem> c2) {
  if (c1.size() != c2.size()) fail(Errc::LengthMismatch, "word lengths differ");
  if (is_zero(c1) || is_zero(c2)) fail(Errc::ZeroInput, "span2_weight needs nonzero words");
  Span2 s;
  s.dim = in_line(f, c1, c2) ? 1 : 2;
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (c1[i] != 0 || c2[i] != 0) ++s.weight;
  return s;
}

}  // namespace gbcodes
