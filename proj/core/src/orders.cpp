#include "gbcodes/orders.hpp"

#include <algorithm>
#include <random>
#include <string_view>

#include "gbcodes/error.hpp"

namespace gbcodes {

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exp_.size(); ++v)
    if (exp_[v] > other.exp_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exp_.size() != exp_.size()) fail(Errc::LengthMismatch, "monomials over different variable sets");
  Monomial r(*this);
  for (std::size_t v = 0; v < exp_.size(); ++v) r.exp_[v] = static_cast<std::uint8_t>(exp_[v] + other.exp_[v]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  const auto& e = m.exponents();
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(e.data()), e.size()));
}

std::string to_string(OrderKind kind) { return kind == OrderKind::deglex ? "deglex" : "degrevlex"; }

OrderKind parse_order(const std::string& name) {
  if (name == "deglex" || name == "grlex") return OrderKind::deglex;
  if (name == "degrevlex" || name == "grevlex" || name == "rev") return OrderKind::degrevlex;
  fail(Errc::InvalidInput, "unknown order '" + name + "' (expected deglex or degrevlex)");
}

Monomial delta(const Field& f, std::span<const Elem> w) {
  const VarLayout layout{static_cast<int>(w.size()), f.q()};
  Monomial m(layout.count());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) m.set(layout.var(static_cast<int>(i) + 1, f.dlog(w[i])), 1);
  return m;
}

bool in_delta_image(const Monomial& m, int q) noexcept {
  const std::size_t block = static_cast<std::size_t>(q - 1);
  for (std::size_t b = 0; b < m.nvars(); b += block) {
    int total = 0;
    for (std::size_t v = b; v < b + block; ++v) total += m[v];
    if (total > 1) return false;
  }
  return true;
}

Word delta_inverse(const Field& f, const Monomial& m) {
  if (m.nvars() % static_cast<std::size_t>(f.q() - 1) != 0 || !in_delta_image(m, f.q()))
    fail(Errc::NotInImage, "monomial is not in the image of delta");
  const VarLayout layout{static_cast<int>(m.nvars() / static_cast<std::size_t>(f.q() - 1)), f.q()};
  Word w(static_cast<std::size_t>(layout.n), 0);
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    const auto [i, j] = layout.coords(v);
    w[static_cast<std::size_t>(i - 1)] = f.alpha_pow(j);
  }
  return w;
}

std::strong_ordering compare(OrderKind order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) fail(Errc::LengthMismatch, "monomials over different variable sets");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (order == OrderKind::deglex) {
    for (std::size_t v = 0; v < ea.size(); ++v)
      if (ea[v] != eb[v]) return ea[v] <=> eb[v];
  } else {
    for (std::size_t v = ea.size(); v-- > 0;)
      if (ea[v] != eb[v]) return eb[v] <=> ea[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering word_compare(OrderKind order, const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "word lengths differ");
  return compare(order, delta(f, a), delta(f, b));
}

std::string render(const Monomial& m, int q) {
  if (m.is_one()) return "1";
  const VarLayout layout{static_cast<int>(m.nvars() / static_cast<std::size_t>(q - 1)), q};
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    const auto [i, j] = layout.coords(v);
    out += "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::exhaustive_true: return "exhaustive-true";
    case CheckStatus::exhaustive_false: return "exhaustive-false";
    case CheckStatus::sampled_true: return "sampled-true";
    case CheckStatus::sampled_false: return "sampled-false";
  }
  return "unknown";
}

namespace {

long double power(long double base, int e) {
  long double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

OrderCheck check_minus_compatibility(OrderKind order, const Field& f, int n, const CheckBudget& budget) {
  if (n < 1) fail(Errc::InvalidInput, "n must be positive");
  const int q = f.q();
  const int states = 2 * q - 1;  // per coordinate: both zero, a nonzero, b nonzero
  OrderCheck res;

  auto test = [&](const Word& a, const Word& b) {
    ++res.tested;
    if (compare(order, delta(f, b), delta(f, a)) < 0) {
      const Word na = scale(f, f.neg(1), a);
      const Word nb = scale(f, f.neg(1), b);
      if (!(compare(order, delta(f, nb), delta(f, na)) < 0)) {
        res.witness = std::make_pair(a, b);
        return false;
      }
    }
    return true;
  };

  if (power(states, n) <= static_cast<long double>(budget.exhaustive_cap)) {
    std::vector<int> st(static_cast<std::size_t>(n), 0);
    Word a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(n), 0);
    while (true) {
      for (int i = 0; i < n; ++i) {
        const int s = st[i];
        a[i] = (s >= 1 && s <= q - 1) ? static_cast<Elem>(s) : 0;
        b[i] = s >= q ? static_cast<Elem>(s - q + 1) : 0;
      }
      if (!test(a, b)) {
        res.status = CheckStatus::exhaustive_false;
        return res;
      }
      int i = 0;
      while (i < n && ++st[i] == states) st[i++] = 0;
      if (i == n) break;
    }
    res.status = CheckStatus::exhaustive_true;
    return res;
  }

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> pick(0, states - 1);
  Word a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (std::uint64_t s = 0; s < budget.samples; ++s) {
    for (int i = 0; i < n; ++i) {
      const int st = pick(rng);
      a[i] = (st >= 1 && st <= q - 1) ? static_cast<Elem>(st) : 0;
      b[i] = st >= q ? static_cast<Elem>(st - q + 1) : 0;
    }
    if (!test(a, b)) {
      res.status = CheckStatus::sampled_false;
      return res;
    }
  }
  res.status = CheckStatus::sampled_true;
  return res;
}

OrderCheck check_block_dominance(OrderKind order, const Field& f, int n, int m, const CheckBudget& budget) {
  if (m < 0 || m > n) fail(Errc::InvalidInput, "block boundary m must lie in 0..n");
  const int q = f.q();
  OrderCheck res;

  auto test = [&](const Word& u, const Word& v) {
    ++res.tested;
    if (!(compare(order, delta(f, v), delta(f, u)) < 0)) {
      res.witness = std::make_pair(u, v);
      return false;
    }
    return true;
  };

  // Words over a coordinate range, grouped by weight; only feasible when
  // (q)^len stays small.
  auto words_by_weight = [&](int begin, int len) {
    std::vector<std::vector<Word>> out(static_cast<std::size_t>(len) + 1);
    std::vector<int> d(static_cast<std::size_t>(len), 0);
    while (true) {
      Word w(static_cast<std::size_t>(n), 0);
      int wt = 0;
      for (int i = 0; i < len; ++i) {
        w[static_cast<std::size_t>(begin + i)] = static_cast<Elem>(d[i]);
        wt += d[i] != 0;
      }
      out[wt].push_back(std::move(w));
      int i = 0;
      while (i < len && ++d[i] == q) d[i++] = 0;
      if (i == len) break;
    }
    return out;
  };

  const long double total = power(q, m) * power(q, n - m);
  if (total <= static_cast<long double>(budget.exhaustive_cap) && power(q, m) <= 1e7 && power(q, n - m) <= 1e7) {
    const auto left = words_by_weight(0, m);
    const auto right = words_by_weight(m, n - m);
    for (int w = 1; w <= std::min(m, n - m); ++w)
      for (const auto& u : left[w])
        for (const auto& v : right[w])
          if (!test(u, v)) {
            res.status = CheckStatus::exhaustive_false;
            return res;
          }
    res.status = CheckStatus::exhaustive_true;
    return res;
  }

  std::mt19937_64 rng(budget.seed);
  const int maxw = std::min(m, n - m);
  if (maxw == 0) {
    res.status = CheckStatus::exhaustive_true;
    return res;
  }
  std::uniform_int_distribution<int> pick_w(1, maxw);
  std::uniform_int_distribution<int> pick_e(1, q - 1);
  auto random_word = [&](int begin, int len, int w) {
    std::vector<int> pos(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) pos[i] = begin + i;
    std::shuffle(pos.begin(), pos.end(), rng);
    Word x(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < w; ++i) x[static_cast<std::size_t>(pos[i])] = static_cast<Elem>(pick_e(rng));
    return x;
  };
  for (std::uint64_t s = 0; s < budget.samples; ++s) {
    const int w = pick_w(rng);
    if (!test(random_word(0, m, w), random_word(m, n - m, w))) {
      res.status = CheckStatus::sampled_false;
      return res;
    }
  }
  res.status = CheckStatus::sampled_true;
  return res;
}

}  // namespace gbcodes
