#include "gbcodes/groebner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "gbcodes/error.hpp"

namespace gbcodes {

Word evaluate(const Field& f, const Monomial& m) {
  const std::size_t block = static_cast<std::size_t>(f.q() - 1);
  Word w(m.nvars() / block, 0);
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    const Elem a = f.alpha_pow(static_cast<long long>(v % block) + 1);
    Elem& c = w[v / block];
    for (int e = 0; e < m[v]; ++e) c = f.add(c, a);
  }
  return w;
}

std::uint64_t GroebnerBasis::syndrome_key(std::span<const Elem> syndrome) const {
  std::uint64_t key = 0;
  for (std::size_t r = syndrome.size(); r-- > 0;) key = key * static_cast<std::uint64_t>(code_.q()) + syndrome[r];
  return key;
}

const Monomial& GroebnerBasis::canonical_form(const Monomial& m) const {
  const Word syn = code_.syndrome(evaluate(field(), m));
  const auto it = standard_.find(syndrome_key(syn));
  if (it == standard_.end()) fail(Errc::Internal, "syndrome class without a standard monomial");
  return it->second;
}

bool GroebnerBasis::is_standard(const Monomial& m) const { return canonical_form(m) == m; }

namespace {

struct Candidate {
  Monomial m;
  Word syn;
};

// Shared state of a traversal: the syndrome table of standard monomials and
// the incremental syndrome update syn(m * x_{i,j}) = syn(m) + alpha^j H_i.
class Traverser {
 public:
  Traverser(const LinearCode& code, OrderKind order, const Caps& caps)
      : code_(code), order_(order), caps_(caps), layout_{code.n(), code.q()} {
    const int r = code.n() - code.k();
    long double cosets = 1;
    for (int i = 0; i < r; ++i) cosets *= code.q();
    if (cosets > static_cast<long double>(caps.cosets))
      fail(Errc::TooLarge, "q^(n-k) exceeds the coset cap");
    expected_ = static_cast<std::uint64_t>(cosets);
    // column contributions alpha^j * H[:, i]
    const auto& h = code.parity_check();
    col_.resize(layout_.count());
    for (std::size_t v = 0; v < layout_.count(); ++v) {
      const auto [i, j] = layout_.coords(v);
      Word c(h.size());
      for (std::size_t row = 0; row < h.size(); ++row)
        c[row] = code.field().mul(code.field().alpha_pow(j), h[row][static_cast<std::size_t>(i - 1)]);
      col_[v] = std::move(c);
    }
    max_degree_ = code.n() * (code.q() - 1) + 1;
  }

  std::uint64_t key(const Word& syn) const {
    std::uint64_t k = 0;
    for (std::size_t r = syn.size(); r-- > 0;) k = k * static_cast<std::uint64_t>(code_.q()) + syn[r];
    return k;
  }

  Candidate times(const Candidate& c, std::size_t v) const {
    Candidate out{c.m, c.syn};
    out.m.inc(v);
    for (std::size_t r = 0; r < out.syn.size(); ++r) out.syn[r] = code_.field().add(out.syn[r], col_[v][r]);
    return out;
  }

  // m is a minimal generator candidate iff every m / x_v is standard (all
  // divisors precede m in the order, so they are already classified).
  bool all_divisors_standard(const Monomial& m) const {
    Monomial d = m;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v] == 0) continue;
      d.dec(v);
      const bool ok = standard_set_.count(d) != 0;
      d.inc(v);
      if (!ok) return false;
    }
    return true;
  }

  // Classifies one candidate: emits an element or records a new standard.
  // Returns true when the candidate became standard.
  bool process(const Candidate& c, std::vector<Binomial>& elements) {
    if (c.m.degree() > max_degree_) fail(Errc::Internal, "traversal exceeded the maximal standard degree");
    const std::uint64_t k = key(c.syn);
    const auto it = table_.find(k);
    if (it != table_.end()) {
      elements.push_back(Binomial{c.m, it->second});
      return false;
    }
    table_.emplace(k, c.m);
    standard_set_.insert(c.m);
    return true;
  }

  std::size_t nvars() const { return layout_.count(); }
  std::uint64_t expected() const { return expected_; }
  const Caps& caps() const { return caps_; }
  OrderKind order() const { return order_; }
  std::unordered_map<std::uint64_t, Monomial>& table() { return table_; }
  Candidate root() const { return Candidate{Monomial(layout_.count()), Word(code_.parity_check().size(), 0)}; }

 private:
  const LinearCode& code_;
  OrderKind order_;
  const Caps& caps_;
  VarLayout layout_;
  std::vector<Word> col_;
  int max_degree_ = 0;
  std::uint64_t expected_ = 0;
  std::unordered_map<std::uint64_t, Monomial> table_;
  std::unordered_set<Monomial, MonomialHash> standard_set_;
};

void run_heap(Traverser& t, std::vector<Binomial>& elements) {
  const OrderKind order = t.order();
  auto greater = [order](const Candidate& a, const Candidate& b) { return compare(order, a.m, b.m) > 0; };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(greater)> frontier(greater);
  std::unordered_set<Monomial, MonomialHash> pushed;

  frontier.push(t.root());
  pushed.insert(t.root().m);
  while (!frontier.empty()) {
    Candidate c = frontier.top();
    frontier.pop();
    if (!t.all_divisors_standard(c.m)) continue;
    if (!t.process(c, elements)) continue;
    for (std::size_t v = 0; v < t.nvars(); ++v) {
      Candidate next = t.times(c, v);
      if (!pushed.insert(next.m).second) continue;
      frontier.push(std::move(next));
      if (frontier.size() > t.caps().frontier) fail(Errc::FrontierOverflow, "frontier exceeds its cap");
    }
  }
}

void run_by_degree(Traverser& t, std::vector<Binomial>& elements) {
  const OrderKind order = t.order();
  std::vector<Candidate> level{t.root()};
  t.process(level.front(), elements);
  while (!level.empty()) {
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Candidate> batch;
    for (const auto& s : level) {
      for (std::size_t v = 0; v < t.nvars(); ++v) {
        Candidate next = t.times(s, v);
        if (!seen.insert(next.m).second) continue;
        if (!t.all_divisors_standard(next.m)) continue;
        batch.push_back(std::move(next));
        if (batch.size() > t.caps().frontier) fail(Errc::FrontierOverflow, "degree batch exceeds its cap");
      }
    }
    std::sort(batch.begin(), batch.end(),
              [order](const Candidate& a, const Candidate& b) { return compare(order, a.m, b.m) < 0; });
    std::vector<Candidate> next_level;
    for (auto& c : batch)
      if (t.process(c, elements)) next_level.push_back(std::move(c));
    level = std::move(next_level);
  }
}

}  // namespace

GroebnerBasis reduced_gb(const LinearCode& code, OrderKind order, const Caps& caps, Traversal traversal) {
  Traverser t(code, order, caps);
  GroebnerBasis gb(code, order);
  if (traversal == Traversal::frontier_heap)
    run_heap(t, gb.elements_);
  else
    run_by_degree(t, gb.elements_);

  if (t.table().size() != t.expected())
    fail(Errc::Internal, "traversal found " + std::to_string(t.table().size()) + " standard monomials, expected " +
                             std::to_string(t.expected()));
  gb.standard_ = std::move(t.table());
  std::sort(gb.elements_.begin(), gb.elements_.end(),
            [order](const Binomial& a, const Binomial& b) { return compare(order, a.lead, b.lead) < 0; });
  return gb;
}

Word associated_codeword(const Field& f, const Binomial& b) {
  Word c = sub(f, evaluate(f, b.lead), evaluate(f, b.trail));
  if (is_zero(c)) fail(Errc::RxElement, "element has zero associated codeword");
  return c;
}

std::vector<ClassifiedElement> classify(const GroebnerBasis& gb) {
  const Field& f = gb.field();
  std::vector<ClassifiedElement> out;
  out.reserve(gb.size());
  for (const auto& b : gb.elements()) {
    const Word a = evaluate(f, b.lead);
    const Word t = evaluate(f, b.trail);
    if (a == t) {
      out.push_back({ElementClass::rx, {}});
      continue;
    }
    const bool square_free = in_delta_image(b.lead, f.q()) && in_delta_image(b.trail, f.q());
    const int wl = b.lead.degree();
    const int wt = b.trail.degree();
    if (!square_free || wt > wl || wl > wt + 1 || !(compare(gb.order(), b.trail, b.lead) < 0))
      fail(Errc::ShapeViolation, "codeword-bearing element " + render(b.lead, f.q()) + " - " +
                                     render(b.trail, f.q()) + " lacks the expected binomial shape");
    out.push_back({ElementClass::codeword, sub(f, a, t)});
  }
  return out;
}

MgResult compute_mg(const GroebnerBasis& gb, const Caps& caps) {
  MgResult res;
  for (const auto& cls : classify(gb))
    if (cls.tag == ElementClass::codeword) res.associated.push_back(cls.codeword);
  std::sort(res.associated.begin(), res.associated.end());
  res.associated.erase(std::unique(res.associated.begin(), res.associated.end()), res.associated.end());

  res.minimal = minimal_support_codewords(gb.code(), caps);
  for (const auto& c : res.associated)
    if (std::binary_search(res.minimal.begin(), res.minimal.end(), c)) res.mg.push_back(c);

  int d1 = gb.code().n() + 1;
  for (const auto& c : res.minimal) d1 = std::min(d1, weight(c));
  const bool has_min = std::any_of(res.mg.begin(), res.mg.end(), [d1](const Word& c) { return weight(c) == d1; });
  if (!has_min) fail(Errc::Falsified, "M_G contains no codeword of minimum weight " + std::to_string(d1));
  return res;
}

MgResult compute_mg(const LinearCode& code, OrderKind order, const Caps& caps) {
  return compute_mg(reduced_gb(code, order, caps), caps);
}

}  // namespace gbcodes
