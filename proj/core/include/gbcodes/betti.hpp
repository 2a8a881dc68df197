#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gbcodes/codes.hpp"
#include "gbcodes/d2.hpp"

namespace gbcodes {

/// Subset of [n] as a bitmask, bit v-1 for vertex v. n <= 32.
using VertexSet = std::uint32_t;

/// Square-free monomial ideal given by its minimal generators (supports).
class SquarefreeIdeal {
 public:
  /// Generators as 1-based vertex lists. Duplicates are merged; a generator
  /// containing another raises InvalidIdeal, as does an empty list.
  static SquarefreeIdeal make(int n, const std::vector<std::vector<int>>& generators);
  /// Supports of the words of M (duplicate supports merged).
  static SquarefreeIdeal from_words(int n, const std::vector<Word>& M);

  int n() const noexcept { return n_; }
  /// Sorted by cardinality, then by mask.
  const std::vector<VertexSet>& generators() const noexcept { return gens_; }

 private:
  SquarefreeIdeal(int n, std::vector<VertexSet> gens) : n_(n), gens_(std::move(gens)) {}

  int n_;
  std::vector<VertexSet> gens_;
};

/// Stanley-Reisner complex: tau is a face iff it contains no generator.
class SimplicialComplex {
 public:
  int n() const noexcept { return n_; }
  bool is_face(VertexSet tau) const { return face_[tau] != 0; }
  /// All faces, ascending by mask.
  std::vector<VertexSet> faces() const;

 private:
  friend SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal&, const Caps&);

  int n_ = 0;
  std::vector<std::uint8_t> face_;  // indexed by mask, size 2^n
};

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal, const Caps& caps = {});

/// dim H~_d of the subcomplex induced on W over GF(ell), for d = -1 .. |W|-1
/// (entry d + 1).
std::vector<int> reduced_homology_dims(const SimplicialComplex& complex, VertexSet W, int ell);

struct BettiTable {
  std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> beta_{i,j}, nonzero only
  int pd = 0;

  std::uint64_t at(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

/// Full table by Hochster's formula over GF(ell).
BettiTable betti_numbers(const SquarefreeIdeal& ideal, int ell = 2, const Caps& caps = {});

/// min{j : beta_{i,j} != 0} by an ascending scan over j, or nullopt when
/// row i is zero.
std::optional<int> betti_min_degree(const SquarefreeIdeal& ideal, int i, int ell = 2, const Caps& caps = {});

/// (min |sigma|, min |sigma u sigma'| over distinct generators).
/// TooFewGenerators if there are fewer than two generators.
std::pair<int, int> direct_mins(const SquarefreeIdeal& ideal);

struct BettiTestSetCheck {
  int d1 = 0;
  int d2 = 0;
  int beta1_min = 0;
  int beta2_min = 0;
  std::pair<int, int> direct{0, 0};  // direct_mins of S_M
  bool has_min_weight = false;  // M contains a codeword of weight d1
  bool is_test_set = false;
  bool first_iff = false;       // beta1_min == d1  <=>  has_min_weight
  bool second_iff = false;      // beta2_min == d2  <=>  is_test_set
  bool direct_agrees = false;   // direct == (beta1_min, beta2_min)
  Verdict status = Verdict::verified;
};

/// M must lie in M(C) (NotMinimalSupport) with at least two supports
/// (TooFewGenerators).
BettiTestSetCheck check_betti_characterization(const LinearCode& code, const std::vector<Word>& M, int ell = 2,
                                const Caps& caps = {});

}  // namespace gbcodes
