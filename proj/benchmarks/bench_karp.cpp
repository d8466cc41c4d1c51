#include <benchmark/benchmark.h>

#include "karp/karp.hpp"

static void BM_FareySequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(karp::farey_sequence(n));
}
BENCHMARK(BM_FareySequence)->Arg(12)->Arg(100)->Arg(1000);

static void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto d = karp::parse_arc(9, "2/7:1/3");
  const auto m = karp::realizing_matrix(d).evaluate(0.37);
  for (auto _ : state) benchmark::DoNotOptimize(karp::characteristic_polynomial(m));
}
BENCHMARK(BM_CharacteristicPolynomial);

static void BM_Roots(benchmark::State& state) {
  const auto p = karp::basic_family(static_cast<int>(state.range(0)), 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(karp::roots(p));
}
BENCHMARK(BM_Roots)->Arg(5)->Arg(12)->Arg(30);

static void BM_TraceArc(benchmark::State& state) {
  const auto d = karp::parse_arc(9, "2/9:1/4");
  for (auto _ : state) benchmark::DoNotOptimize(karp::trace_arc(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TraceArc)->Arg(64)->Arg(256);

static void BM_Boundary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(karp::boundary(static_cast<int>(state.range(0)), 256));
}
// boundary() traces on worker threads, so CPU time of the caller is meaningless
BENCHMARK(BM_Boundary)->Arg(5)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Membership(benchmark::State& state) {
  const auto model = karp::boundary(9, 256);
  const std::complex<double> z(-0.3, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(karp::membership(z, 9, model));
}
BENCHMARK(BM_Membership);

static void BM_VerifyOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(karp::verify_order(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyOrder)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
