#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gbcodes/codes.hpp"
#include "gbcodes/orders.hpp"

namespace gbcodes {

/// lead - trail with lead > trail in the active order.
struct Binomial {
  Monomial lead;
  Monomial trail;

  bool operator==(const Binomial&) const = default;
};

/// Word of a monomial under x_{i,j} -> alpha^j e_i, extended additively:
/// coordinate i is sum_j exp(i,j) * alpha^j.
Word evaluate(const Field& f, const Monomial& m);

enum class Traversal {
  frontier_heap,     // one priority queue over all candidates
  degree_by_degree,  // sorted batches of equal degree
};

/// Reduced Groebner basis of the binomial ideal of a linear code.
///
/// Standard monomials are the order-minimal monomials of each syndrome class,
/// so there are exactly q^(n-k) of them. Elements are sorted by lead,
/// ascending in the order.
class GroebnerBasis {
 public:
  OrderKind order() const noexcept { return order_; }
  const LinearCode& code() const noexcept { return code_; }
  const Field& field() const noexcept { return code_.field(); }
  const std::vector<Binomial>& elements() const noexcept { return elements_; }
  std::size_t standard_count() const noexcept { return standard_.size(); }
  std::size_t size() const noexcept { return elements_.size(); }

  /// The unique standard monomial in m's syndrome class.
  const Monomial& canonical_form(const Monomial& m) const;
  bool is_standard(const Monomial& m) const;

  /// Exposed for the traversal implementations.
  std::uint64_t syndrome_key(std::span<const Elem> syndrome) const;

 private:
  friend GroebnerBasis reduced_gb(const LinearCode&, OrderKind, const Caps&, Traversal);

  GroebnerBasis(const LinearCode& code, OrderKind order) : code_(code), order_(order) {}

  LinearCode code_;
  OrderKind order_;
  std::vector<Binomial> elements_;
  std::unordered_map<std::uint64_t, Monomial> standard_;  // syndrome key -> standard monomial
};

GroebnerBasis reduced_gb(const LinearCode& code, OrderKind order, const Caps& caps = {},
                         Traversal traversal = Traversal::frontier_heap);

enum class ElementClass { rx, codeword };

struct ClassifiedElement {
  ElementClass tag = ElementClass::rx;
  Word codeword;  // c_f = evaluate(lead) - evaluate(trail); empty for rx
};

/// Tags each element; codeword-bearing elements are checked for the
/// blockwise square-free shape with w(trail) <= w(lead) <= w(trail) + 1, and
/// a violation raises ShapeViolation.
std::vector<ClassifiedElement> classify(const GroebnerBasis& gb);

/// c_f = a - b for f = x^delta(a) - x^delta(b). RxElement if c_f = 0.
Word associated_codeword(const Field& f, const Binomial& b);

struct MgResult {
  std::vector<Word> associated;  // distinct nonzero c_f, sorted
  std::vector<Word> mg;          // associated intersected with M(C), sorted
  std::vector<Word> minimal;     // M(C)
};

/// M_G for an already computed basis. Raises Falsified if M_G misses every
/// minimum-weight codeword.
MgResult compute_mg(const GroebnerBasis& gb, const Caps& caps = {});
MgResult compute_mg(const LinearCode& code, OrderKind order, const Caps& caps = {});

}  // namespace gbcodes
