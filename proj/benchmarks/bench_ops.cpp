// Cost of single set operations as generator and factor counts grow.

#include <benchmark/benchmark.h>

#include <random>

#include "logizono/logizono.hpp"

using namespace logizono;

namespace {

BinaryVector random_vec(std::mt19937_64& r, std::size_t n) {
  BinaryVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, r() & 1);
  return v;
}

// n-bit poly zonotope with h generators over p consecutive ids from `first`.
PolyLogicalZonotope random_poly(std::mt19937_64& r, std::size_t n, std::size_t h, std::size_t p,
                                FactorId first) {
  BinaryMatrix g(n), e(p);
  for (std::size_t i = 0; i < h; ++i) {
    g.push_back(random_vec(r, n));
    auto col = random_vec(r, p);
    if (col.none()) col.set(i % p);
    e.push_back(std::move(col));
  }
  std::vector<FactorId> ids(p);
  for (std::size_t k = 0; k < p; ++k) ids[k] = first + k;
  IdAllocator::global().reserve_through(first + p);
  return PolyLogicalZonotope(random_vec(r, n), std::move(g), std::move(e), std::move(ids));
}

LogicalZonotope random_logical(std::mt19937_64& r, std::size_t n, std::size_t h) {
  BinaryMatrix g(n);
  for (std::size_t i = 0; i < h; ++i) g.push_back(random_vec(r, n));
  return LogicalZonotope(random_vec(r, n), std::move(g));
}

void BM_LogicalXor(benchmark::State& state) {
  std::mt19937_64 r(1);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = random_logical(r, 32, h), b = random_logical(r, 32, h);
  for (auto _ : state) benchmark::DoNotOptimize(lz_xor(a, b));
}
BENCHMARK(BM_LogicalXor)->RangeMultiplier(2)->Range(2, 32);

void BM_LogicalAnd(benchmark::State& state) {
  std::mt19937_64 r(2);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = random_logical(r, 32, h), b = random_logical(r, 32, h);
  for (auto _ : state) benchmark::DoNotOptimize(lz_and(a, b));
}
BENCHMARK(BM_LogicalAnd)->RangeMultiplier(2)->Range(2, 16);

void BM_PolyMinkowskiAnd(benchmark::State& state) {
  std::mt19937_64 r(3);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(r, 16, h, 8, 1), b = random_poly(r, 16, h, 8, 9);
  for (auto _ : state) benchmark::DoNotOptimize(pz_mink_and(a, b));
}
BENCHMARK(BM_PolyMinkowskiAnd)->RangeMultiplier(2)->Range(2, 32);

void BM_PolyExactAnd(benchmark::State& state) {
  std::mt19937_64 r(4);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(r, 16, h, 8, 1), b = random_poly(r, 16, h, 8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pz_exact_and(a, b));
}
BENCHMARK(BM_PolyExactAnd)->RangeMultiplier(2)->Range(2, 32);

void BM_PolyExactAndCompact(benchmark::State& state) {
  std::mt19937_64 r(4);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(r, 16, h, 8, 1), b = random_poly(r, 16, h, 8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pz_exact_apply_compact(Gate::And, a, b));
}
BENCHMARK(BM_PolyExactAndCompact)->RangeMultiplier(2)->Range(2, 32);

void BM_PolyEvaluate(benchmark::State& state) {
  std::mt19937_64 r(5);
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto z = random_poly(r, 16, 2 * p, p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pz_evaluate(z));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(1) << p);
}
BENCHMARK(BM_PolyEvaluate)->DenseRange(4, 16, 4)->Complexity(benchmark::oN);

void BM_PolyCompact(benchmark::State& state) {
  std::mt19937_64 r(6);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto z = random_poly(r, 16, h, 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pz_compact(z));
}
BENCHMARK(BM_PolyCompact)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
