// Whole reachability runs on the built-in models.

#include <benchmark/benchmark.h>

#include "logizono/logizono.hpp"

using namespace logizono;

namespace {

void run(benchmark::State& state, const Model& m, Algebra algebra, Mode mode) {
  ReachOptions o;
  o.algebra = algebra;
  o.mode = mode;
  o.keep_sets = false;
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reach(m, steps, o));
}

void BM_IntersectionLogical(benchmark::State& state) {
  run(state, intersection_model(), Algebra::Logical, Mode::Minkowski);
}
BENCHMARK(BM_IntersectionLogical)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_IntersectionPolyExact(benchmark::State& state) {
  run(state, intersection_model(), Algebra::Poly, Mode::Exact);
}
BENCHMARK(BM_IntersectionPolyExact)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_IntersectionExplicit(benchmark::State& state) {
  run(state, intersection_model(), Algebra::Explicit, Mode::Minkowski);
}
BENCHMARK(BM_IntersectionExplicit)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Boolean10PolyExact(benchmark::State& state) {
  run(state, boolean10_model(1), Algebra::Poly, Mode::Exact);
}
BENCHMARK(BM_Boolean10PolyExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LfsrRecover(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const auto spec = LfsrSpec::scaled(l);
  BinaryVector key(l), msg(2 * l);
  for (std::size_t i = 0; i < l; i += 3) key.set(i);
  for (std::size_t i = 0; i < 2 * l; i += 5) msg.set(i);
  const auto cipher = lfsr_encrypt(spec, key, msg);
  for (auto _ : state) benchmark::DoNotOptimize(lfsr_recover_key(spec, msg, cipher));
}
BENCHMARK(BM_LfsrRecover)->Arg(16)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
