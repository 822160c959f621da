#include <benchmark/benchmark.h>

#include "kforge/invariants.hpp"
#include "kforge/laurent.hpp"
#include "kforge/recognize.hpp"
#include "kforge/seq.hpp"

using namespace kforge;

namespace {

const Operator& apery() {
  static const Operator L = parse_operator("D^3 - t*(34*D^3+51*D^2+27*D+5) + t^2*(D+1)^3");
  return L;
}

void BM_PeriodCoeffs(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(period_coeffs(apery(), K));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PeriodCoeffs)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SampleExpansion(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const Arithmetic mode = state.range(1) ? Arithmetic::Float : Arithmetic::Exact;
  const auto nodes = thinned_nodes(K, 13);
  for (auto _ : state) benchmark::DoNotOptimize(sample_expansion(apery(), 0, 3, nodes, 256, mode));
}
BENCHMARK(BM_SampleExpansion)
    ->ArgsProduct({{500, 1000, 2000}, {0, 1}})
    ->ArgNames({"K", "float"})
    ->Unit(benchmark::kMillisecond);

void BM_Extrapolate(benchmark::State& state) {
  const auto depth = static_cast<unsigned>(state.range(0));
  const auto nodes = thinned_nodes(2000, depth + 1);
  std::vector<BigFloat> x;
  for (std::size_t n : nodes) x.push_back(BigFloat(1L, 256) + BigFloat(1L, 256) / BigFloat(static_cast<long>(n), 256));
  for (auto _ : state) benchmark::DoNotOptimize(extrapolate_limit(x, nodes, depth));
}
BENCHMARK(BM_Extrapolate)->DenseRange(4, 16, 4);

void BM_LaurentPeriods(benchmark::State& state) {
  const LaurentPoly phi = parse_laurent("(1-x1-x2+x1*x2-x1*x2*x3)*(1-x1^-1)*(1-x2^-1)*(1-x3^-1)");
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(period_sequence(phi, K));
}
BENCHMARK(BM_LaurentPeriods)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

void BM_Recognize(benchmark::State& state) {
  const auto labels = std::vector<std::string>{"zeta2", "zeta3", "pi", "log:2", "log:3"};
  const ConstantBasis basis = ConstantBasis::from_labels(
      std::vector<std::string>(labels.begin(), labels.begin() + state.range(0)));
  const auto vals = basis.values(256);
  BigFloat x = BigFloat(Rational(17, 6), 256) * vals.back();
  for (auto _ : state) benchmark::DoNotOptimize(recognize_value(x, basis, 100, 200));
}
BENCHMARK(BM_Recognize)->DenseRange(1, 5, 2);

void BM_AperyConstant(benchmark::State& state) {
  PipelineConfig cfg;
  cfg.K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery_constant(apery(), 1, cfg));
}
BENCHMARK(BM_AperyConstant)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
