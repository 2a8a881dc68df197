#include "gbcodes/betti.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "gbcodes/error.hpp"

namespace gbcodes {

SquarefreeIdeal SquarefreeIdeal::make(int n, const std::vector<std::vector<int>>& generators) {
  if (n < 1 || n > 32) fail(Errc::TooLarge, "square-free ideals support 1..32 variables");
  std::vector<VertexSet> gens;
  for (const auto& g : generators) {
    VertexSet s = 0;
    for (int v : g) {
      if (v < 1 || v > n) fail(Errc::InvalidIdeal, "generator vertex " + std::to_string(v) + " outside 1..n");
      s |= VertexSet{1} << (v - 1);
    }
    if (s == 0) fail(Errc::InvalidIdeal, "empty generator gives the unit ideal");
    gens.push_back(s);
  }
  if (gens.empty()) fail(Errc::InvalidIdeal, "ideal needs at least one generator");
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && (gens[i] & gens[j]) == gens[i])
        fail(Errc::InvalidIdeal, "generators do not form an antichain under inclusion");
  return SquarefreeIdeal(n, std::move(gens));
}

SquarefreeIdeal SquarefreeIdeal::from_words(int n, const std::vector<Word>& M) {
  std::vector<std::vector<int>> gens;
  for (const auto& w : M) {
    if (static_cast<int>(w.size()) != n) fail(Errc::LengthMismatch, "word length differs from n");
    std::vector<int> s = support(w);
    for (auto& v : s) ++v;
    gens.push_back(std::move(s));
  }
  return make(n, gens);
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  for (std::size_t t = 0; t < face_.size(); ++t)
    if (face_[t]) out.push_back(static_cast<VertexSet>(t));
  return out;
}

SimplicialComplex stanley_reisner_complex(const SquarefreeIdeal& ideal, const Caps& caps) {
  if (ideal.n() > caps.homology_vertices) fail(Errc::TooLarge, "too many vertices for homology computations");
  SimplicialComplex c;
  c.n_ = ideal.n();
  const std::size_t size = std::size_t{1} << ideal.n();
  std::vector<std::uint8_t> nonface(size, 0);
  for (VertexSet g : ideal.generators()) nonface[g] = 1;
  // superset closure
  for (int b = 0; b < ideal.n(); ++b)
    for (std::size_t t = 0; t < size; ++t)
      if (t >> b & 1) nonface[t] |= nonface[t ^ (std::size_t{1} << b)];
  c.face_.resize(size);
  for (std::size_t t = 0; t < size; ++t) c.face_[t] = !nonface[t];
  return c;
}

namespace {

int rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t ncols) {
  int rank = 0;
  const std::size_t words = (ncols + 63) / 64;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = top;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    for (std::size_t r = top + 1; r < rows.size(); ++r)
      if (rows[r][w] & bit)
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[top][k];
    ++top;
    ++rank;
  }
  return rank;
}

int rank_modp(std::vector<std::vector<int>>& rows, std::size_t ncols, int p) {
  int rank = 0;
  std::size_t top = 0;
  auto inv = [p](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  };
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const int li = inv(rows[top][col]);
    for (std::size_t k = col; k < ncols; ++k) rows[top][k] = rows[top][k] * li % p;
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      const int factor = rows[r][col];
      if (factor == 0) continue;
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[top][k]) % p + p) % p;
    }
    ++top;
    ++rank;
  }
  return rank;
}

// Faces of the complex inside W, grouped by cardinality (index = |tau|).
std::vector<std::vector<VertexSet>> faces_by_size(const SimplicialComplex& c, VertexSet W) {
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(std::popcount(W)) + 1);
  for (VertexSet t = W;; t = (t - 1) & W) {
    if (c.is_face(t)) out[static_cast<std::size_t>(std::popcount(t))].push_back(t);
    if (t == 0) break;
  }
  for (auto& f : out) std::sort(f.begin(), f.end());
  return out;
}

// Rank of the boundary map from faces of cardinality s to cardinality s-1.
int boundary_rank(const std::vector<std::vector<VertexSet>>& faces, std::size_t s, int ell) {
  if (s == 0 || s >= faces.size()) return 0;
  const auto& hi = faces[s];
  const auto& lo = faces[s - 1];
  if (hi.empty() || lo.empty()) return 0;
  auto index = [&lo](VertexSet t) {
    return static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), t) - lo.begin());
  };
  if (ell == 2) {
    std::vector<std::vector<std::uint64_t>> rows(hi.size(), std::vector<std::uint64_t>((lo.size() + 63) / 64, 0));
    for (std::size_t r = 0; r < hi.size(); ++r)
      for (VertexSet rest = hi[r]; rest; rest &= rest - 1) {
        const std::size_t col = index(hi[r] & ~(rest & -rest));
        rows[r][col / 64] |= std::uint64_t{1} << (col % 64);
      }
    return rank_gf2(rows, lo.size());
  }
  std::vector<std::vector<int>> rows(hi.size(), std::vector<int>(lo.size(), 0));
  for (std::size_t r = 0; r < hi.size(); ++r) {
    int pos = 0;
    for (VertexSet rest = hi[r]; rest; rest &= rest - 1, ++pos)
      rows[r][index(hi[r] & ~(rest & -rest))] = pos % 2 == 0 ? 1 : ell - 1;
  }
  return rank_modp(rows, lo.size(), ell);
}

void check_ell(int ell) {
  if (!is_prime(ell)) fail(Errc::InvalidInput, "coefficient characteristic must be prime");
}

// Union of the generators contained in W; equals W iff Delta_W has no cone
// point, which is the only case with nonzero reduced homology.
VertexSet covered(const std::vector<VertexSet>& gens, VertexSet W) {
  VertexSet u = 0;
  for (VertexSet g : gens)
    if ((g & ~W) == 0) u |= g;
  return u;
}

int homology_dim(const SimplicialComplex& c, VertexSet W, int d, int ell) {
  const auto faces = faces_by_size(c, W);
  const std::size_t s = static_cast<std::size_t>(d + 1);  // cardinality of d-faces
  if (s >= faces.size()) return 0;
  return static_cast<int>(faces[s].size()) - boundary_rank(faces, s, ell) - boundary_rank(faces, s + 1, ell);
}

}  // namespace

std::vector<int> reduced_homology_dims(const SimplicialComplex& complex, VertexSet W, int ell) {
  check_ell(ell);
  const auto faces = faces_by_size(complex, W);
  std::vector<int> ranks(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) ranks[s] = boundary_rank(faces, s, ell);
  std::vector<int> dims(faces.size(), 0);
  for (std::size_t s = 0; s < faces.size(); ++s)
    dims[s] = static_cast<int>(faces[s].size()) - ranks[s] - ranks[s + 1];
  return dims;
}

BettiTable betti_numbers(const SquarefreeIdeal& ideal, int ell, const Caps& caps) {
  check_ell(ell);
  const SimplicialComplex c = stanley_reisner_complex(ideal, caps);
  const std::size_t total = std::size_t{1} << ideal.n();
  std::mutex mu;
  BettiTable table;
  parallel_chunks(total, caps.workers, [&](std::size_t b, std::size_t e, unsigned) {
    std::map<std::pair<int, int>, std::uint64_t> local;
    for (std::size_t w = b; w < e; ++w) {
      const auto W = static_cast<VertexSet>(w);
      if (covered(ideal.generators(), W) != W) continue;
      const auto dims = reduced_homology_dims(c, W, ell);
      const int j = std::popcount(W);
      for (std::size_t s = 0; s < dims.size(); ++s)
        if (dims[s] > 0) local[{j - static_cast<int>(s), j}] += static_cast<std::uint64_t>(dims[s]);
    }
    std::lock_guard lock(mu);
    for (const auto& [key, v] : local) table.entries[key] += v;
  });
  for (const auto& [key, v] : table.entries) table.pd = std::max(table.pd, key.first);
  return table;
}

std::optional<int> betti_min_degree(const SquarefreeIdeal& ideal, int i, int ell, const Caps& caps) {
  check_ell(ell);
  if (i < 0) fail(Errc::BadIndex, "homological degree must be nonnegative");
  if (i == 0) return 0;
  const SimplicialComplex c = stanley_reisner_complex(ideal, caps);
  const int n = ideal.n();
  for (int j = i; j <= n; ++j) {
    // all W with |W| = j, in increasing mask order
    std::vector<VertexSet> level;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t W = (std::uint64_t{1} << j) - 1; W < limit;) {
      level.push_back(static_cast<VertexSet>(W));
      const std::uint64_t low = W & -W;
      const std::uint64_t ripple = W + low;
      W = ripple | (((W ^ ripple) >> 2) / low);
    }
    std::vector<char> hit(level.size(), 0);
    parallel_chunks(level.size(), caps.workers, [&](std::size_t b, std::size_t e, unsigned) {
      for (std::size_t x = b; x < e; ++x) {
        if (covered(ideal.generators(), level[x]) != level[x]) continue;
        if (homology_dim(c, level[x], j - i - 1, ell) > 0) hit[x] = 1;
      }
    });
    if (std::any_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) return j;
  }
  return std::nullopt;
}

std::pair<int, int> direct_mins(const SquarefreeIdeal& ideal) {
  const auto& g = ideal.generators();
  if (g.size() < 2) fail(Errc::TooFewGenerators, "pair minimum needs at least two generators");
  int single = 33, pair = 33;
  for (std::size_t a = 0; a < g.size(); ++a) {
    single = std::min(single, std::popcount(g[a]));
    for (std::size_t b = a + 1; b < g.size(); ++b) pair = std::min(pair, std::popcount(g[a] | g[b]));
  }
  return {single, pair};
}

BettiTestSetCheck check_betti_characterization(const LinearCode& code, const std::vector<Word>& M, int ell, const Caps& caps) {
  BettiTestSetCheck r;
  const std::vector<Word> minimal = minimal_support_codewords(code, caps);
  r.d1 = ghw(code, 1, caps);
  r.d2 = ghw(code, 2, caps);
  const TestSetResult ts = is_d2_test_set(code.field(), M, r.d2, minimal);
  r.is_test_set = ts.is_test_set;
  const SquarefreeIdeal ideal = SquarefreeIdeal::from_words(code.n(), M);
  r.direct = direct_mins(ideal);
  r.beta1_min = betti_min_degree(ideal, 1, ell, caps).value_or(0);
  r.beta2_min = betti_min_degree(ideal, 2, ell, caps).value_or(0);
  r.has_min_weight = std::any_of(M.begin(), M.end(), [&](const Word& c) { return weight(c) == r.d1; });
  r.first_iff = (r.beta1_min == r.d1) == r.has_min_weight;
  r.second_iff = (r.beta2_min == r.d2) == r.is_test_set;
  r.direct_agrees = r.direct == std::make_pair(r.beta1_min, r.beta2_min);
  r.status = r.first_iff && r.second_iff && r.direct_agrees ? Verdict::verified : Verdict::falsified;
  return r;
}

}  // namespace gbcodes
