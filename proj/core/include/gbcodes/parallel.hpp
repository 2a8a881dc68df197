#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gbcodes {

/// Resource caps shared by the enumeration kernels. All of them are
/// configuration; the defaults are the documented ones.
struct Caps {
  std::uint64_t enumeration = 2'000'000;    // q^k codewords
  std::uint64_t pair_evals = 100'000'000;   // subspace / pair evaluations
  std::uint64_t cosets = 2'000'000;         // q^(n-k) standard monomials
  std::uint64_t frontier = 50'000'000;      // pending traversal candidates
  int homology_vertices = 16;               // n for Stanley-Reisner work
  unsigned workers = 0;                     // 0 = hardware concurrency
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// fn(begin, end, worker) on each. Chunk boundaries depend only on count and
/// the worker count, so reductions over per-worker results are deterministic
/// as long as they are order-independent (min, sum, any).
template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(resolve_workers(workers),
                                            static_cast<unsigned>(std::max<std::size_t>(1, count / 1024 + 1))));
  if (workers == 1) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = std::min(count, w * step);
    const std::size_t e = std::min(count, b + step);
    pool.emplace_back([&, b, e, w] {
      try {
        fn(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace gbcodes
