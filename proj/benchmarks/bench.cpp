#include <benchmark/benchmark.h>

#include <random>

#include "gbcodes/betti.hpp"
#include "gbcodes/codes.hpp"
#include "gbcodes/counterexample.hpp"
#include "gbcodes/d2.hpp"
#include "gbcodes/groebner.hpp"

using namespace gbcodes;

namespace {

LinearCode ternary_9_3() {
  return LinearCode::from_generator(Field::make(3),
                                    {{1, 0, 0, 0, 0, 1, 0, 2, 0}, {0, 1, 0, 0, 1, 1, 1, 0, 1}, {0, 0, 1, 1, 2, 2, 1, 1, 0}});
}

LinearCode random_code(const Field& f, int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Word> rows(static_cast<std::size_t>(k), Word(static_cast<std::size_t>(n)));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<Elem>(rng() % static_cast<unsigned>(f.q()));
    if (rank(f, rows) == k) return LinearCode::from_generator(f, rows);
  }
}

Caps single() {
  Caps c;
  c.workers = 1;
  return c;
}

}  // namespace

static void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(2, 4);
  Elem acc = 1;
  for (auto _ : state) {
    for (int a = 1; a < 16; ++a) acc = f.mul(acc, static_cast<Elem>(a)) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul);

static void BM_Ghw2(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const LinearCode c = random_code(Field::make(3), n, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ghw(c, 2, single()));
}
BENCHMARK(BM_Ghw2)->Arg(8)->Arg(12)->Arg(16);

static void BM_MinimalSupports(benchmark::State& state) {
  const LinearCode c = random_code(Field::make(2, 2), 10, static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_support_codewords(c, single()).size());
}
BENCHMARK(BM_MinimalSupports)->Arg(3)->Arg(4)->Arg(5);

static void BM_GroebnerTernary93(benchmark::State& state) {
  const LinearCode c = ternary_9_3();
  const auto t = state.range(0) == 0 ? Traversal::frontier_heap : Traversal::degree_by_degree;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_gb(c, OrderKind::degrevlex, single(), t).size());
}
BENCHMARK(BM_GroebnerTernary93)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GroebnerCosets(benchmark::State& state) {
  // q^(n-k) standard monomials for q = 3, k = 3.
  const LinearCode c = random_code(Field::make(3), static_cast<int>(state.range(0)), 3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_gb(c, OrderKind::degrevlex, single()).size());
  state.counters["cosets"] = static_cast<double>(reduced_gb(c, OrderKind::degrevlex, single()).standard_count());
}
BENCHMARK(BM_GroebnerCosets)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

static void BM_M1M2(benchmark::State& state) {
  const LinearCode c = random_code(Field::make(3), 12, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(compute_m1_m2(c, OrderKind::degrevlex, single()).d2);
}
BENCHMARK(BM_M1M2)->Arg(3)->Arg(5);

static void BM_BettiFull(benchmark::State& state) {
  const LinearCode c = random_code(Field::make(2), static_cast<int>(state.range(0)), 4, 11);
  const auto I = SquarefreeIdeal::from_words(c.n(), minimal_support_codewords(c));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(I, 2, single()).pd);
}
BENCHMARK(BM_BettiFull)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_BettiMinDegree(benchmark::State& state) {
  const LinearCode c = random_code(Field::make(2), 14, 4, 11);
  const auto I = SquarefreeIdeal::from_words(c.n(), minimal_support_codewords(c));
  for (auto _ : state) benchmark::DoNotOptimize(betti_min_degree(I, 2, 2, single()));
}
BENCHMARK(BM_BettiMinDegree)->Unit(benchmark::kMillisecond);

static void BM_CounterexampleMechanism(benchmark::State& state) {
  const SeedCode s = example_seed(Field::make(3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_mechanism(s, single()).words_checked);
}
BENCHMARK(BM_CounterexampleMechanism)->Unit(benchmark::kMillisecond);

static void BM_CounterexampleMinimalPlane(benchmark::State& state) {
  const CounterexampleCode cc = build_counterexample(example_seed(Field::make(3)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_minimal_plane(cc, single()).minimizers);
}
BENCHMARK(BM_CounterexampleMinimalPlane)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
