#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbcodes/codes.hpp"
#include "gbcodes/d2.hpp"
#include "gbcodes/orders.hpp"

namespace gbcodes {

/// Two-dimensional seed code D' with basis (c1', c2') = (m1(D'), m2(D')).
struct SeedCode {
  LinearCode dprime;
  OrderKind order;
  Word c1p;
  Word c2p;
  std::vector<int> I;  // supp(c1'), 1-based
  std::vector<int> J;  // supp(c2'), 1-based
  int d2 = 0;
  int r = 0;             // floor(|J| / 2)
  bool rebased = false;  // the given basis was replaced by the computed (m1, m2)
};

/// Computes m1/m2 of a two-dimensional code and checks the seed hypotheses:
/// 2|I n J| > |J| + 1, (|I| < |J| or |J| even), and the consequences
/// d2 < 3r, d2 < |I| + r, w(c2') >= 2r. HypothesisFailed otherwise.
SeedCode make_seed(const LinearCode& dprime, OrderKind order, const Caps& caps = {});

/// D' = <c1, c2> in GF(q)^(2q+2) with c1 = (1, 1, a..a^(q-1), a..a^(q-1), 0, 0)
/// and c2 = (0, 0, 1, ..., 1). Every nonzero word must have weight 2q.
SeedCode example_seed(const Field& f, OrderKind order = OrderKind::degrevlex, const Caps& caps = {});

struct SeedSearch {
  std::optional<SeedCode> seed;
  std::uint64_t trials = 0;
  bool exhaustive = true;  // false when the trial budget ran out
};

/// Scans two-dimensional codes of length 2..m_max (RREF generator matrices,
/// ascending length) for the first one passing make_seed.
SeedSearch search_seed(const Field& f, int m_max, OrderKind order = OrderKind::degrevlex,
                       std::uint64_t trial_budget = 1'000'000, const Caps& caps = {});

/// All words u' with supp(u') in supp(D') and w(u') = r, descending in the
/// order. Its size is C(w(D'), r) (q-1)^r.
std::vector<Word> seed_words_p(const SeedCode& seed);

/// The code <c1, c2, u_1 - v_1, ..., u_t - v_t> of length m + t r, where u_i
/// is the i-th largest word of P and v_i is the all-ones block at
/// coordinates m + (i-1) r + 1 .. m + i r.
struct CounterexampleCode {
  SeedCode seed;
  std::vector<Word> P;   // complete, descending
  std::uint64_t ell = 0;
  int t = 0;
  int m = 0;
  int n = 0;
  int k = 0;
  OrderCheck dominance;  // block dominance at boundary m

  Word c1() const;
  Word c2() const;
  /// u_i - v_i for 1 <= i <= t.
  Word row(int i) const;
  std::vector<Word> generator_rows() const;
  LinearCode code() const;
};

/// TruncationOutOfRange unless 1 <= t <= ell; OrderNotCompatible if block
/// dominance fails. The t + 2 generators are checked for independence.
CounterexampleCode build_counterexample(const SeedCode& seed, int t, const CheckBudget& budget = {});

struct MinimalPlaneCheck {
  int d2 = 0;
  int d2_seed = 0;
  std::uint64_t subspaces = 0;
  std::uint64_t minimizers = 0;  // 2-subspaces attaining d2
  bool unique_minimizer = false;
  bool minimizer_is_d = false;  // the minimizer is <c1, c2>
  bool m1_is_c1 = false;
  bool m2_is_c2 = false;
  Verdict status = Verdict::verified;
};

/// Brute force over every two-dimensional subspace of the truncated code.
MinimalPlaneCheck verify_minimal_plane(const CounterexampleCode& cc, const Caps& caps = {});

struct MechanismCheck {
  bool leads_dominate = false;   // Delta(u_i) > Delta(v_i) for all i in [ell]
  bool p_complete = false;       // every b in supp(D') with w(b) >= r has a divisor from P
  bool plane_weights = false;    // w(c) >= 2r on <c1, c2> \ <c1>
  std::uint64_t words_checked = 0;
  std::optional<Word> witness;   // first failing word, if any
  Verdict status = Verdict::verified;
};

/// Structural checks at full scale (all of P, no Groebner basis needed).
MechanismCheck verify_mechanism(const SeedCode& seed, const Caps& caps = {});

struct GbTierCheck {
  std::size_t gb_size = 0;
  std::size_t mg_size = 0;
  bool mg_is_test_set = false;
  std::optional<std::pair<Word, Word>> witness;
};

/// Reduced basis of the truncated code and the test-set status of M_G.
/// TooLarge when q^(n-k) exceeds the coset cap.
GbTierCheck verify_gb_tier(const CounterexampleCode& cc, const Caps& caps = {});

}  // namespace gbcodes
