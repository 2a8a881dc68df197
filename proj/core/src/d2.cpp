#include "gbcodes/d2.hpp"

#include <algorithm>
#include <bit>

#include "gbcodes/error.hpp"

namespace gbcodes {

namespace {

int popcount(SupportMask m) { return std::popcount(m); }

std::vector<int> support1(const Word& w) {
  std::vector<int> s = support(w);
  for (auto& i : s) ++i;
  return s;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

// Index of the order-minimal word among the flagged ones, or -1.
long long order_min(const Field& f, OrderKind order, const std::vector<Word>& words, const std::vector<char>& flag) {
  long long best = -1;
  Monomial best_m;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!flag[i]) continue;
    Monomial m = delta(f, words[i]);
    if (best < 0 || compare(order, m, best_m) < 0) {
      best = static_cast<long long>(i);
      best_m = std::move(m);
    }
  }
  return best;
}

}  // namespace

M1M2 compute_m1_m2(const LinearCode& code, OrderKind order, const Caps& caps) {
  if (code.k() < 2) fail(Errc::DimensionTooSmall, "m1/m2 need a code of dimension at least 2");
  return compute_m1_m2(code, order, ghw(code, 2, caps), caps);
}

M1M2 compute_m1_m2(const LinearCode& code, OrderKind order, int d2, const Caps& caps) {
  if (code.k() < 2) fail(Errc::DimensionTooSmall, "m1/m2 need a code of dimension at least 2");
  const std::vector<Word> words = enumerate(code, caps);
  const long double pairs = static_cast<long double>(words.size()) * static_cast<long double>(words.size());
  if (pairs > static_cast<long double>(caps.pair_evals)) fail(Errc::TooLarge, "codeword pair scan exceeds the cap");

  std::vector<SupportMask> mask(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) mask[i] = support_mask(words[i]);

  // w(<m, m'>) is the size of the support union in every case, since a
  // multiple of m has its support inside supp(m).
  std::vector<char> in_m1(words.size(), 0);
  parallel_chunks(words.size(), caps.workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      if (mask[i] == 0) continue;
      for (std::size_t j = 0; j < words.size(); ++j)
        if (popcount(mask[i] | mask[j]) == d2) {
          in_m1[i] = 1;
          break;
        }
    }
  });
  const long long i1 = order_min(code.field(), order, words, in_m1);
  if (i1 < 0) fail(Errc::Falsified, "M1 is empty");

  std::vector<char> in_m2(words.size(), 0);
  for (std::size_t j = 0; j < words.size(); ++j)
    in_m2[j] = popcount(mask[static_cast<std::size_t>(i1)] | mask[j]) == d2;
  const long long i2 = order_min(code.field(), order, words, in_m2);
  if (i2 < 0) fail(Errc::Falsified, "M2 is empty");

  M1M2 r;
  r.m1 = words[static_cast<std::size_t>(i1)];
  r.m2 = words[static_cast<std::size_t>(i2)];
  r.I = support1(r.m1);
  r.J = support1(r.m2);
  r.d2 = d2;
  return r;
}

D2Report analyze_d2(const LinearCode& code, OrderKind order, const Caps& caps, const CheckBudget& budget) {
  const M1M2 mm = compute_m1_m2(code, order, caps);
  D2Report r;
  r.m1 = mm.m1;
  r.m2 = mm.m2;
  r.I = mm.I;
  r.J = mm.J;
  r.d2 = mm.d2;
  r.intersection = intersection_size(r.I, r.J);
  const int si = static_cast<int>(r.I.size());
  const int sj = static_cast<int>(r.J.size());
  r.intersection_bound = 2 * r.intersection <= sj + 1;

  const int uni = si + sj - r.intersection;
  const int q = code.q();
  if (uni != r.d2) fail(Errc::Falsified, "d2 != |I u J|");
  if (si >= r.d2) fail(Errc::Falsified, "|I| >= d2");
  if (sj >= r.d2) fail(Errc::Falsified, "|J| >= d2");
  if (si > sj) fail(Errc::Falsified, "|I| > |J|");
  if (q * r.intersection > (q - 1) * si) fail(Errc::Falsified, "|I n J| > (q-1)/q |I|");

  r.minus_compatible = check_minus_compatibility(order, code.field(), code.n(), budget);
  return r;
}

TestSetResult is_d2_test_set(const Field& f, const std::vector<Word>& M, int d2, const std::vector<Word>& minimal) {
  std::vector<Word> sorted = M;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& c : sorted)
    if (!std::binary_search(minimal.begin(), minimal.end(), c))
      fail(Errc::NotMinimalSupport, "a member of M is not a minimal-support codeword");

  TestSetResult r;
  std::vector<SupportMask> mask(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) mask[i] = support_mask(sorted[i]);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (popcount(mask[i] | mask[j]) != d2) continue;
      if (in_line(f, sorted[i], sorted[j])) continue;
      r.is_test_set = true;
      r.witness = std::make_pair(sorted[i], sorted[j]);
      return r;
    }
  return r;
}

TestSetResult is_d2_test_set(const LinearCode& code, const std::vector<Word>& M, const Caps& caps) {
  return is_d2_test_set(code.field(), M, ghw(code, 2, caps), minimal_support_codewords(code, caps));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::silent: return "silent";
    case Verdict::falsified: return "falsified";
  }
  return "unknown";
}

MgTestSetCheck check_mg_test_set(const LinearCode& code, OrderKind order, const Caps& caps,
                                const MgTestSetOptions& options) {
  MgTestSetCheck out;
  out.report = analyze_d2(code, order, caps, options.budget);
  D2Report& rep = out.report;
  const Field& f = code.field();

  const GroebnerBasis gb = reduced_gb(code, order, caps);
  out.gb_size = gb.size();
  const MgResult mg = compute_mg(gb, caps);
  out.mg = mg.mg;
  const TestSetResult ts = is_d2_test_set(f, mg.mg, rep.d2, mg.minimal);
  rep.mg_is_test_set = ts.is_test_set;
  rep.witness = ts.witness;

  const SupportMask m1_mask = support_mask(rep.m1);
  const int w2 = weight(rep.m2);
  const auto classes = classify(gb);
  for (std::size_t e = 0; e < classes.size(); ++e) {
    if (classes[e].tag != ElementClass::codeword) continue;
    const Word& c = classes[e].codeword;
    if (!out.f && c == rep.m1) out.f = gb.elements()[e];
    if (std::popcount(m1_mask | support_mask(c)) == rep.d2 && weight(c) == w2) {
      if (!out.g) out.g = gb.elements()[e];
      if (c == rep.m2) {
        out.g = gb.elements()[e];
        out.cg_is_m2 = true;
      }
    }
  }
  if (out.g && !out.cg_is_m2) out.cg_is_m2 = false;

  if (!rep.intersection_bound) {
    out.status = Verdict::silent;
    out.reason = "hypothesis 2|I n J| <= |J| + 1 does not hold";
    return out;
  }
  if (!out.f) {
    out.status = Verdict::falsified;
    out.reason = "no basis element has c_f = m1";
    return out;
  }
  const OrderCheck& mc = rep.minus_compatible;
  if (!mc.holds()) {
    out.status = Verdict::silent;
    out.reason = "minus-compatibility of the order fails (" + to_string(mc.status) + ")";
    return out;
  }
  if (!mc.exhaustive() && !options.allow_sampled_order_check) {
    out.status = Verdict::silent;
    out.reason = "minus-compatibility of the order only sampled";
    return out;
  }
  if (!out.g) {
    out.status = Verdict::falsified;
    out.reason = "no basis element g with w(<m1, c_g>) = d2 and w(c_g) = w(m2)";
    return out;
  }
  if (f.p() == 2 && !*out.cg_is_m2) {
    out.status = Verdict::falsified;
    out.reason = "characteristic 2 but no basis element has c_g = m2";
    return out;
  }
  if (!ts.is_test_set) {
    out.status = Verdict::falsified;
    out.reason = "M_G is not a d2-test set";
    return out;
  }
  out.status = Verdict::verified;
  return out;
}

IntersectionBoundCheck check_intersection_bound(const LinearCode& code, OrderKind order, const Caps& caps) {
  const M1M2 mm = compute_m1_m2(code, order, caps);
  IntersectionBoundCheck r;
  r.intersection = intersection_size(mm.I, mm.J);
  r.size_i = static_cast<int>(mm.I.size());
  r.size_j = static_cast<int>(mm.J.size());
  const int q = code.q();
  r.holds = q * r.intersection <= (q - 1) * r.size_i && r.size_i <= r.size_j;
  return r;
}

}  // namespace gbcodes
