#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gbcodes/betti.hpp"
#include "gbcodes/codes.hpp"
#include "gbcodes/groebner.hpp"
#include "gbcodes/orders.hpp"

// Slow reference implementations. None of them calls the library kernel
// they are used to check.
namespace oracle {

using gbcodes::Field;
using gbcodes::LinearCode;
using gbcodes::Word;

/// Plain Gaussian elimination on a copy.
int rank_of(const Field& f, std::vector<Word> rows);

/// Every word of GF(q)^n, in base-q counting order.
std::vector<Word> all_words(const Field& f, int n);

/// Codewords as the words w with rank(G + w) == k.
std::vector<Word> codewords_by_rank(const LinearCode& code);

/// d_r = min n - |Z| over coordinate sets Z with k - rank(G restricted to Z) >= r.
int ghw_by_shortening(const LinearCode& code, int r);

/// Weight of <a, b> from the explicit list of its q^2 elements.
int span_weight(const Field& f, const Word& a, const Word& b);

std::vector<Word> minimal_supports_naive(const std::vector<Word>& codewords);

struct M1M2 {
  Word m1;
  Word m2;
};

/// From the definitions, with span weights taken from explicit spans.
M1M2 m1_m2_naive(const LinearCode& code, gbcodes::OrderKind order);

/// Every pair a, b with a - b in C and delta(b) < delta(a) has delta(a)
/// divisible by some lead. Returns the number of pairs checked, or -1.
long long gb_completeness(const gbcodes::GroebnerBasis& gb);

/// Leads form an antichain and no trail is divisible by a lead.
bool is_reduced(const gbcodes::GroebnerBasis& gb);

/// sum over subsets S of generators of (-1)^|S| t^|lcm S|, as degree -> coeff.
std::map<int, long long> k_polynomial_taylor(const gbcodes::SquarefreeIdeal& ideal);
/// sum (-1)^i beta_{i,j} t^j.
std::map<int, long long> k_polynomial_betti(const gbcodes::BettiTable& t);

/// Random full-rank k x n generator over f.
LinearCode random_code(const Field& f, int n, int k, std::mt19937_64& rng);

}  // namespace oracle
