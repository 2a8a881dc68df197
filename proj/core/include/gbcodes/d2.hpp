#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbcodes/codes.hpp"
#include "gbcodes/groebner.hpp"
#include "gbcodes/orders.hpp"

namespace gbcodes {

/// m1 = min M1 and m2 = min M2 in the word order, with their supports
/// (1-based, ascending).
struct M1M2 {
  Word m1;
  Word m2;
  std::vector<int> I;
  std::vector<int> J;
  int d2 = 0;
};

/// M1 = {m != 0 : some m' in C has w(<m, m'>) = d2}, m' ranging over all of C
/// including multiples of m. M2 = {m in C : w(<m1, m>) = d2}.
/// DimensionTooSmall if k < 2.
M1M2 compute_m1_m2(const LinearCode& code, OrderKind order, const Caps& caps = {});
M1M2 compute_m1_m2(const LinearCode& code, OrderKind order, int d2, const Caps& caps = {});

struct D2Report {
  Word m1;
  Word m2;
  std::vector<int> I;
  std::vector<int> J;
  int d2 = 0;
  int intersection = 0;
  bool intersection_bound = false;  // 2|I n J| <= |J| + 1
  OrderCheck minus_compatible;
  std::optional<bool> mg_is_test_set;
  std::optional<std::pair<Word, Word>> witness;
};

/// m1/m2 analysis plus the order condition verdict. The structural
/// invariants (d2 = |I u J|, |I| < d2, |J| < d2, |I| <= |J|,
/// q|I n J| <= (q-1)|I|) are checked and a violation raises Falsified.
D2Report analyze_d2(const LinearCode& code, OrderKind order, const Caps& caps = {}, const CheckBudget& budget = {});

struct TestSetResult {
  bool is_test_set = false;
  std::optional<std::pair<Word, Word>> witness;  // first pair in sorted order
};

/// NotMinimalSupport if some member of M lies outside `minimal`.
TestSetResult is_d2_test_set(const Field& f, const std::vector<Word>& M, int d2, const std::vector<Word>& minimal);
TestSetResult is_d2_test_set(const LinearCode& code, const std::vector<Word>& M, const Caps& caps = {});

enum class Verdict { verified, silent, falsified };
std::string to_string(Verdict v);

struct MgTestSetOptions {
  bool allow_sampled_order_check = false;
  CheckBudget budget;
};

struct MgTestSetCheck {
  Verdict status = Verdict::silent;
  std::string reason;
  D2Report report;
  std::size_t gb_size = 0;
  std::vector<Word> mg;
  std::optional<Binomial> f;   // c_f = m1
  std::optional<Binomial> g;   // w(<m1, c_g>) = d2 and w(c_g) = w(m2)
  std::optional<bool> cg_is_m2;  // some such g has c_g = m2
};

/// Evaluates the |I n J| <= (|J|+1)/2 hypothesis and, when it holds, the
/// existence of f and g in the reduced basis and the test-set property of
/// M_G. Minus-compatibility must be verified exhaustively unless the options allow
/// a sampled verdict; otherwise the result is silent. For q = 2^s a g with
/// c_g = m2 is required; for other q it is only recorded.
MgTestSetCheck check_mg_test_set(const LinearCode& code, OrderKind order, const Caps& caps = {},
                                const MgTestSetOptions& options = {});

struct IntersectionBoundCheck {
  int intersection = 0;
  int size_i = 0;
  int size_j = 0;
  bool holds = false;  // q|I n J| <= (q-1)|I| <= (q-1)|J|
};

IntersectionBoundCheck check_intersection_bound(const LinearCode& code, OrderKind order, const Caps& caps = {});

}  // namespace gbcodes
