#include <benchmark/benchmark.h>

#include <string>

#include "tanglecospan/functor.hpp"
#include "tanglecospan/laws.hpp"
#include "tanglecospan/random.hpp"

using namespace tanglecospan;

namespace {

LMatrix random_laurent_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng = sample_rng(seed, 0, n);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  LMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Laurent::monomial(coef(rng), ex(rng)) + Laurent::monomial(coef(rng), ex(rng));
  return m;
}

TangleWord upward_braid(std::size_t strands, std::size_t length) {
  Rng rng = sample_rng(7, 0, strands * 1000 + length);
  TangleWord w = random_braid_word(rng, strands, length);
  w.source = SignSeq(std::vector<int>(strands, 1));
  return w;
}

}  // namespace

static void BM_LaurentProduct(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::vector<Laurent::Term> a, b;
  for (int k = -n; k <= n; ++k) {
    a.push_back({k, k + 7});
    b.push_back({k, 3 - k});
  }
  const Laurent p = Laurent::from_terms(a), q = Laurent::from_terms(b);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_LaurentProduct)->Arg(4)->Arg(16)->Arg(64);

static void BM_Determinant(benchmark::State& state) {
  const LMatrix m = random_laurent_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8, 2);

static void BM_InvariantFactors(benchmark::State& state) {
  const LMatrix m = random_laurent_matrix(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->DenseRange(2, 6, 2);

// Fold cost grows with word length; the generator table is warm after the first iteration.
static void BM_BurauFold(benchmark::State& state) {
  const TangleWord w = upward_braid(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(burau_matrix(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BurauFold)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_OracleCospan(benchmark::State& state) {
  const TangleWord w = upward_braid(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_cospan(w));
}
BENCHMARK(BM_OracleCospan)->RangeMultiplier(2)->Range(4, 32);

static void BM_AlexanderTorusKnot(benchmark::State& state) {
  std::string text = "@[++] ";
  for (int k = 0; k < state.range(0); ++k) text += k ? ";x1" : "x1";
  const TangleWord w = parse_word(text);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(w));
}
BENCHMARK(BM_AlexanderTorusKnot)->Arg(3)->Arg(9)->Arg(27);

static void BM_CrossCheck(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = sample_rng(5, 0, i++ % 64);
    benchmark::DoNotOptimize(cross_check(random_word(rng, Family::any, WordOptions{})));
  }
}
BENCHMARK(BM_CrossCheck);

static void BM_Laws(benchmark::State& state) {
  LawOptions opt;
  opt.samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(check_laws(opt));
}
BENCHMARK(BM_Laws)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
