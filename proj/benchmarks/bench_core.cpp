#include "gitcomb/census.hpp"
#include "gitcomb/stability.hpp"

#include <benchmark/benchmark.h>

using namespace gitcomb;

namespace {

Configuration sample_configuration(int n, int d) {
  std::vector<ProjPoint> points;
  for (int i = 0; i < n; ++i) points.push_back(ProjPoint::finite(i + 2));
  std::vector<BinaryForm> forms;
  forms.push_back(BinaryForm::monomial(d, 0));
  std::vector<Rational> c(d + 1, Rational(0));
  c.front() = 1;
  c.back() = -1;
  forms.push_back(BinaryForm(d, c));
  forms.push_back(BinaryForm::linear_at(ProjPoint::finite(1)).pow(d));
  return Configuration(std::move(points), std::move(forms));
}

void BM_stability_status(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  Configuration c = sample_configuration(n, d);
  Linearization k = case_linearization(n, d);
  for (auto _ : state) benchmark::DoNotOptimize(stability_status(c, k));
}
BENCHMARK(BM_stability_status)->Args({2, 3})->Args({4, 5})->Args({5, 7});

void BM_hm_oracle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  Configuration c = sample_configuration(n, d);
  Linearization k = case_linearization(n, d);
  for (auto _ : state) benchmark::DoNotOptimize(hm_oracle(c, k));
}
BENCHMARK(BM_hm_oracle)->Args({2, 3})->Args({4, 5});

void BM_gcd_forms(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  BinaryForm common = BinaryForm::linear_at(ProjPoint::finite(3)).pow(d / 2);
  BinaryForm a = common * BinaryForm::monomial(d - d / 2, 1);
  BinaryForm b = common * BinaryForm::linear_at(ProjPoint::infinity()).pow(d - d / 2);
  std::vector<BinaryForm> forms{a, b};
  for (auto _ : state) benchmark::DoNotOptimize(gcd_forms(forms));
}
BENCHMARK(BM_gcd_forms)->Arg(6)->Arg(12)->Arg(20);

void BM_census(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  Linearization k = case_linearization(n, d);
  for (auto _ : state) benchmark::DoNotOptimize(census(n, d, 2, k));
}
BENCHMARK(BM_census)->Args({3, 2})->Args({5, 5})->Args({8, 6});

void BM_wall_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(wall_enumerate(n, d));
}
BENCHMARK(BM_wall_enumerate)->Args({5, 5})->Args({8, 6});

}  // namespace

BENCHMARK_MAIN();
