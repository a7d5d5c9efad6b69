#include <benchmark/benchmark.h>

#include <cstddef>

#include "cfinite/kernels.hpp"
#include "cfinite/rational.hpp"

using namespace cfinite;

namespace {

RationalVec start_state(unsigned width) {
  RationalVec s(std::size_t{1} << width);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = make_rational(static_cast<long>(i % 7) - 3, static_cast<long>(i % 5) + 1);
  return s;
}

void transfer_serial(benchmark::State& st) {
  const unsigned w = static_cast<unsigned>(st.range(0));
  const RationalVec s = start_state(w);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::transfer_step_serial(w, s, 2, make_rational(1, 3)));
}

void transfer_omp(benchmark::State& st) {
  const unsigned w = static_cast<unsigned>(st.range(0));
  const RationalVec s = start_state(w);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::transfer_step_omp(w, s, 2, make_rational(1, 3)));
  st.counters["threads"] = kernels::max_threads();
}

// Each probe does a little exact arithmetic, like a factor-search candidate.
bool probe(std::size_t i, std::size_t target) {
  Rational x = 0;
  for (long k = 1; k <= 40; ++k) x += make_rational(1, static_cast<long>(i) + k);
  return i == target && x != 0;
}

void first_match_serial(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_match_serial(n, [n](std::size_t i) { return probe(i, n - 1); }));
}

void first_match_omp(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_match_omp(n, [n](std::size_t i) { return probe(i, n - 1); }));
  st.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(transfer_serial)->DenseRange(6, 10, 2);
BENCHMARK(transfer_omp)->DenseRange(6, 10, 2);
BENCHMARK(first_match_serial)->Arg(256)->Arg(2048);
BENCHMARK(first_match_omp)->Arg(256)->Arg(2048);

BENCHMARK_MAIN();
