#include "lambdaq/lambda.hpp"
#include "lambdaq/modpoly.hpp"
#include "lambdaq/scan.hpp"

#include <benchmark/benchmark.h>

using namespace lambdaq;

namespace {

CycNum dense_cyc(unsigned n, int seed) {
  std::vector<Rat> coords(euler_phi(n));
  for (size_t i = 0; i < coords.size(); ++i)
    coords[i] = Rat((seed * 31 + static_cast<int>(i) * 17) % 19 - 9);
  return CycNum::from_coords(n, std::move(coords));
}

void bm_cyc_mul(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  CycNum a = dense_cyc(n, 1);
  CycNum b = dense_cyc(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_cyc_mul)->Arg(7)->Arg(12)->Arg(30);

void bm_cyc_inverse(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  CycNum a = dense_cyc(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(bm_cyc_inverse)->Arg(7)->Arg(12);

void bm_series_mul(benchmark::State& state) {
  long t = state.range(0);
  UniMat s{0, -1, 1, 0};
  QSeries<CycNum> a = phi_slash(1, s, 7, t);
  QSeries<CycNum> b = phi_slash(3, s, 7, t);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_series_mul)->Arg(50)->Arg(150);

void bm_series_invert(benchmark::State& state) {
  long t = state.range(0);
  QSeries<CycNum> d = phi_diff_slash(2, 1, UniMat{0, -1, 1, 0}, 7, t);
  for (auto _ : state) benchmark::DoNotOptimize(d.invert());
}
BENCHMARK(bm_series_invert)->Arg(50)->Arg(150);

void bm_phi_slash(benchmark::State& state) {
  UniMat a{1, 0, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(phi_slash(3, a, 7, state.range(0)));
}
BENCHMARK(bm_phi_slash)->Arg(100)->Arg(400);

void bm_lambda_expansion(benchmark::State& state) {
  LambdaSpec spec{7, 3};
  UniMat a{0, -1, 1, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(lambda_expansion(spec, a, state.range(0)));
}
BENCHMARK(bm_lambda_expansion)->Arg(50)->Arg(200);

void bm_transversal(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transversal(n));
}
BENCHMARK(bm_transversal)->Arg(7)->Arg(12)->Arg(30);

void bm_j_expansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(j_expansion(7, state.range(0)));
}
BENCHMARK(bm_j_expansion)->Arg(210)->Arg(700);

}  // namespace

BENCHMARK_MAIN();
