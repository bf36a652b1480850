#include "fricke/charring.hpp"
#include "fricke/pretzel.hpp"
#include "fricke/random_words.hpp"
#include "fricke/sl2_oracle.hpp"
#include "fricke/trace.hpp"
#include "fricke/variety.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fricke;

namespace {

std::vector<Word> corpus(std::size_t syllables, std::size_t count = 64) {
  std::mt19937_64 rng(7);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_word(rng, syllables, 4));
  return out;
}

}  // namespace

// Cold cache: every iteration starts from an empty memo table.
static void BM_TraceCold(benchmark::State& state) {
  const auto words = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    TraceEngine engine(Strategy::leftmost);
    for (const Word& u : words) benchmark::DoNotOptimize(engine.trace(u));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_TraceCold)->Arg(4)->Arg(8)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_TraceWarm(benchmark::State& state) {
  const auto words = corpus(static_cast<std::size_t>(state.range(0)));
  TraceEngine engine(Strategy::leftmost);
  for (const Word& u : words) engine.trace(u);
  for (auto _ : state)
    for (const Word& u : words) benchmark::DoNotOptimize(engine.trace(u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_TraceWarm)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_PolyMultiply(benchmark::State& state) {
  const Poly p = explicit_Rn(static_cast<std::int64_t>(state.range(0)));
  const Poly q = explicit_Q();
  for (auto _ : state) benchmark::DoNotOptimize(p * q * p);
}
BENCHMARK(BM_PolyMultiply)->Arg(5)->Arg(20)->Arg(60)->Unit(benchmark::kMicrosecond);

static void BM_OracleCheck(benchmark::State& state) {
  const auto words = corpus(20, 8);
  for (auto _ : state)
    for (const Word& u : words) benchmark::DoNotOptimize(oracle_check(u, 10));
}
BENCHMARK(BM_OracleCheck)->Unit(benchmark::kMillisecond);

static void BM_ReductionCertificate(benchmark::State& state) {
  const auto pool = structured_u_pool();
  const Word r = pretzel_r_word();
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm1_reduction(r, state.range(0), pool));
}
BENCHMARK(BM_ReductionCertificate)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_VarietyIdentities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identity_suite(state.range(0)));
}
BENCHMARK(BM_VarietyIdentities)->Arg(4)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
