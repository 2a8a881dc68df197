#include "gbcodes/counterexample.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gbcodes/error.hpp"
#include "gbcodes/groebner.hpp"

namespace gbcodes {

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : w) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace

SeedCode make_seed(const LinearCode& dprime, OrderKind order, const Caps& caps) {
  if (dprime.k() != 2) fail(Errc::InvalidInput, "seed codes must have dimension 2");
  const M1M2 mm = compute_m1_m2(dprime, order, caps);
  SeedCode s{dprime, order, mm.m1, mm.m2, mm.I, mm.J, mm.d2, 0, false};
  s.rebased = !(dprime.generator()[0] == mm.m1 && dprime.generator()[1] == mm.m2);

  const int si = static_cast<int>(s.I.size());
  const int sj = static_cast<int>(s.J.size());
  const int inter = intersection_size(s.I, s.J);
  s.r = sj / 2;
  if (!(2 * inter > sj + 1))
    fail(Errc::HypothesisFailed, "|I n J| = " + std::to_string(inter) + " does not exceed (|J|+1)/2");
  if (!(si < sj || sj % 2 == 0)) fail(Errc::HypothesisFailed, "|I| = |J| with |J| odd");
  if (!(s.d2 < 3 * s.r)) fail(Errc::HypothesisFailed, "d2(D') >= 3r");
  if (!(s.d2 < si + s.r)) fail(Errc::HypothesisFailed, "d2(D') >= |I| + r");
  if (weight(s.c2p) < 2 * s.r) fail(Errc::HypothesisFailed, "w(c2') < 2r");
  return s;
}

SeedCode example_seed(const Field& f, OrderKind order, const Caps& caps) {
  const int q = f.q();
  if (q <= 2) fail(Errc::HypothesisFailed, "the example family needs q > 2");
  const std::size_t m = static_cast<std::size_t>(2 * q + 2);
  Word c1(m, 0), c2(m, 0);
  c1[0] = c1[1] = 1;
  for (int j = 1; j <= q - 1; ++j) {
    c1[static_cast<std::size_t>(1 + j)] = f.alpha_pow(j);
    c1[static_cast<std::size_t>(q + j)] = f.alpha_pow(j);
  }
  for (std::size_t i = 2; i < m; ++i) c2[i] = 1;
  const LinearCode d = LinearCode::from_generator(f, {c1, c2});
  for (const auto& w : enumerate(d, caps))
    if (!is_zero(w) && weight(w) != 2 * q)
      fail(Errc::HypothesisFailed, "example seed has a nonzero word of weight " + std::to_string(weight(w)));
  return make_seed(d, order, caps);
}

SeedSearch search_seed(const Field& f, int m_max, OrderKind order, std::uint64_t trial_budget, const Caps& caps) {
  SeedSearch res;
  const int q = f.q();
  for (int m = 2; m <= m_max; ++m) {
    for (int p0 = 0; p0 < m; ++p0)
      for (int p1 = p0 + 1; p1 < m; ++p1) {
        // free entries: row 0 at columns > p0 except p1, row 1 at columns > p1
        std::vector<std::pair<int, int>> slots;
        for (int c = p0 + 1; c < m; ++c)
          if (c != p1) slots.emplace_back(0, c);
        for (int c = p1 + 1; c < m; ++c) slots.emplace_back(1, c);
        std::vector<int> digit(slots.size(), 0);
        while (true) {
          if (res.trials >= trial_budget) {
            res.exhaustive = false;
            return res;
          }
          ++res.trials;
          std::vector<Word> g(2, Word(static_cast<std::size_t>(m), 0));
          g[0][static_cast<std::size_t>(p0)] = 1;
          g[1][static_cast<std::size_t>(p1)] = 1;
          for (std::size_t s = 0; s < slots.size(); ++s)
            g[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] =
                static_cast<Elem>(digit[s]);
          try {
            res.seed = make_seed(LinearCode::from_generator(f, g), order, caps);
            return res;
          } catch (const Error& e) {
            if (e.code() != Errc::HypothesisFailed) throw;
          }
          std::size_t s = 0;
          while (s < slots.size() && ++digit[s] == q) digit[s++] = 0;
          if (s == slots.size()) break;
        }
      }
  }
  return res;
}

std::vector<Word> seed_words_p(const SeedCode& seed) {
  const Field& f = seed.dprime.field();
  const int q = f.q();
  const std::size_t m = static_cast<std::size_t>(seed.dprime.n());
  std::vector<int> supp;
  for (std::size_t i = 0; i < m; ++i)
    if (seed.c1p[i] != 0 || seed.c2p[i] != 0) supp.push_back(static_cast<int>(i));
  const int w = static_cast<int>(supp.size());
  const int r = seed.r;

  std::vector<Word> P;
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (r <= w) {
    std::vector<int> colour(static_cast<std::size_t>(r), 1);
    while (true) {
      Word u(m, 0);
      for (int i = 0; i < r; ++i) u[static_cast<std::size_t>(supp[pick[i]])] = static_cast<Elem>(colour[i]);
      P.push_back(std::move(u));
      int i = 0;
      while (i < r && ++colour[i] == q) colour[i++] = 1;
      if (i == r) break;
    }
    int i = r - 1;
    while (i >= 0 && pick[i] == w - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<std::pair<Monomial, std::size_t>> keyed;
  keyed.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) keyed.emplace_back(delta(f, P[i]), i);
  const OrderKind order = seed.order;
  std::sort(keyed.begin(), keyed.end(),
            [order](const auto& a, const auto& b) { return compare(order, a.first, b.first) > 0; });
  std::vector<Word> out;
  out.reserve(P.size());
  for (const auto& [mono, i] : keyed) out.push_back(P[i]);
  return out;
}

Word CounterexampleCode::c1() const {
  Word w = seed.c1p;
  w.resize(static_cast<std::size_t>(n), 0);
  return w;
}

Word CounterexampleCode::c2() const {
  Word w = seed.c2p;
  w.resize(static_cast<std::size_t>(n), 0);
  return w;
}

Word CounterexampleCode::row(int i) const {
  if (i < 1 || i > t) fail(Errc::BadIndex, "row index outside 1..t");
  Word w = P[static_cast<std::size_t>(i - 1)];
  w.resize(static_cast<std::size_t>(n), 0);
  const Elem minus_one = seed.dprime.field().neg(1);
  const int r = seed.r;
  for (int c = m + (i - 1) * r; c < m + i * r; ++c) w[static_cast<std::size_t>(c)] = minus_one;
  return w;
}

std::vector<Word> CounterexampleCode::generator_rows() const {
  std::vector<Word> rows{c1(), c2()};
  for (int i = 1; i <= t; ++i) rows.push_back(row(i));
  return rows;
}

LinearCode CounterexampleCode::code() const {
  return LinearCode::from_generator(seed.dprime.field(), generator_rows());
}

CounterexampleCode build_counterexample(const SeedCode& seed, int t, const CheckBudget& budget) {
  CounterexampleCode cc{seed, seed_words_p(seed), 0, 0, 0, 0, 0, {}};
  cc.ell = cc.P.size();
  if (t < 1 || static_cast<std::uint64_t>(t) > cc.ell)
    fail(Errc::TruncationOutOfRange, "t must lie in 1.." + std::to_string(cc.ell));
  cc.t = t;
  cc.m = seed.dprime.n();
  cc.n = cc.m + t * seed.r;
  cc.k = t + 2;
  cc.dominance = check_block_dominance(seed.order, seed.dprime.field(), cc.n, cc.m, budget);
  if (!cc.dominance.holds())
    fail(Errc::OrderNotCompatible, "order fails block dominance at boundary " + std::to_string(cc.m));
  if (rank(seed.dprime.field(), cc.generator_rows()) != cc.k)
    fail(Errc::Internal, "counterexample generators are dependent");
  return cc;
}

MinimalPlaneCheck verify_minimal_plane(const CounterexampleCode& cc, const Caps& caps) {
  const LinearCode code = cc.code();
  const Field& f = code.field();
  MinimalPlaneCheck r;
  const GhwResult g = ghw_detail(code, 2, caps);
  r.d2 = g.value;
  r.d2_seed = cc.seed.d2;
  r.subspaces = g.subspaces;
  r.minimizers = g.attaining;
  r.unique_minimizer = g.attaining == 1;
  if (!g.witnesses.empty()) {
    const Echelon a = rref(f, g.witnesses.front());
    const Echelon b = rref(f, {cc.c1(), cc.c2()});
    r.minimizer_is_d = a.rows == b.rows;
  }
  const M1M2 mm = compute_m1_m2(code, cc.seed.order, g.value, caps);
  r.m1_is_c1 = mm.m1 == cc.c1();
  r.m2_is_c2 = mm.m2 == cc.c2();
  const bool ok = r.d2 == r.d2_seed && r.unique_minimizer && r.minimizer_is_d && r.m1_is_c1 && r.m2_is_c2;
  r.status = ok ? Verdict::verified : Verdict::falsified;
  return r;
}

MechanismCheck verify_mechanism(const SeedCode& seed, const Caps& caps) {
  MechanismCheck res;
  const Field& f = seed.dprime.field();
  const int q = f.q();
  const int m = seed.dprime.n();
  const int r = seed.r;
  const std::vector<Word> P = seed_words_p(seed);
  const auto ell = static_cast<int>(P.size());
  const std::size_t n = static_cast<std::size_t>(m + ell * r);

  // (a) Delta(u_i) > Delta(v_i) in the full-length ring
  res.leads_dominate = true;
  for (int i = 1; i <= ell && res.leads_dominate; ++i) {
    Word u = P[static_cast<std::size_t>(i - 1)];
    u.resize(n, 0);
    Word v(n, 0);
    for (int c = m + (i - 1) * r; c < m + i * r; ++c) v[static_cast<std::size_t>(c)] = 1;
    if (!(compare(seed.order, delta(f, u), delta(f, v)) > 0)) {
      res.leads_dominate = false;
      res.witness = P[static_cast<std::size_t>(i - 1)];
    }
  }

  // (b) every b supported in supp(D') with w(b) >= r is divisible by some u' in P
  std::vector<int> supp;
  for (int i = 0; i < m; ++i)
    if (seed.c1p[static_cast<std::size_t>(i)] != 0 || seed.c2p[static_cast<std::size_t>(i)] != 0) supp.push_back(i);
  long double total = 1;
  for (std::size_t i = 0; i < supp.size(); ++i) total *= q;
  if (total > static_cast<long double>(caps.enumeration)) fail(Errc::TooLarge, "too many words on supp(D')");
  const std::unordered_set<Word, WordHash> pset(P.begin(), P.end());
  res.p_complete = true;
  std::vector<int> digit(supp.size(), 0);
  while (res.p_complete) {
    Word b(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < supp.size(); ++i) b[static_cast<std::size_t>(supp[i])] = static_cast<Elem>(digit[i]);
    if (weight(b) >= r) {
      ++res.words_checked;
      const std::vector<int> sb = support(b);
      const Monomial mb = delta(f, b);
      bool found = false;
      std::vector<int> pick(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) pick[i] = i;
      const int w = static_cast<int>(sb.size());
      while (!found) {
        Word u(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < r; ++i) u[static_cast<std::size_t>(sb[pick[i]])] = b[static_cast<std::size_t>(sb[pick[i]])];
        if (pset.count(u) && delta(f, u).divides(mb)) found = true;
        int i = r - 1;
        while (i >= 0 && pick[i] == w - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (!found) {
        res.p_complete = false;
        res.witness = b;
      }
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == q) digit[i++] = 0;
    if (i == digit.size()) break;
  }

  // (c) weights on the plane outside the line of c1'
  res.plane_weights = true;
  for (const auto& c : enumerate(seed.dprime, caps)) {
    if (is_zero(c) || in_line(f, seed.c1p, c)) continue;
    if (weight(c) < 2 * r) {
      res.plane_weights = false;
      res.witness = c;
      break;
    }
  }

  res.status = res.leads_dominate && res.p_complete && res.plane_weights ? Verdict::verified : Verdict::falsified;
  return res;
}

GbTierCheck verify_gb_tier(const CounterexampleCode& cc, const Caps& caps) {
  const LinearCode code = cc.code();
  const GroebnerBasis gb = reduced_gb(code, cc.seed.order, caps);
  const MgResult mg = compute_mg(gb, caps);
  const TestSetResult ts = is_d2_test_set(code.field(), mg.mg, ghw(code, 2, caps), mg.minimal);
  GbTierCheck r;
  r.gb_size = gb.size();
  r.mg_size = mg.mg.size();
  r.mg_is_test_set = ts.is_test_set;
  r.witness = ts.witness;
  return r;
}

}  // namespace gbcodes
