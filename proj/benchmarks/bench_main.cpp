#include <benchmark/benchmark.h>

#include "ncdouble/catalog.hpp"

namespace {

using namespace ncd;

void BM_ScalarArithmetic(benchmark::State& state) {
  Scalar q = Scalar::q(), h = Scalar::h();
  Scalar a = (q * q - 1) / (q + h), b = (h * q + 3) / (q * q * q - h);
  for (auto _ : state) {
    Scalar c = a * b + a / b - b * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarArithmetic);

void BM_NormalizeWeyl(benchmark::State& state) {
  CatalogParams p;
  p.m = 1;
  DoubleSpec hw = catalog_build("hw", p).dbl.value();
  NCPoly d = hw.gen("x^1"), x = hw.gen("x_1");
  NCPoly w = NCPoly::constant(hw.alphabet(), Scalar(1));
  for (int64_t k = 0; k < state.range(0); ++k) w = w * d;
  for (int64_t k = 0; k < state.range(0); ++k) w = w * x;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(hw.system(), w));
}
BENCHMARK(BM_NormalizeWeyl)->Arg(4)->Arg(8)->Arg(12);

void BM_CriticalPairs(benchmark::State& state) {
  CatalogParams p;
  p.N = 2;
  if (state.range(0) == 1) p.variant = "ii";
  DoubleSpec d = catalog_build(state.range(0) == 0 ? "u2_calculus" : "re_re", p).dbl.value();
  for (auto _ : state) benchmark::DoNotOptimize(check_sigma_consistency(d, 3));
}
BENCHMARK(BM_CriticalPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IdealSpan(benchmark::State& state) {
  DoubleSpec fock = catalog_build("fock", {}).dbl.value();
  auto rels = fock.all_relations();
  for (auto _ : state) {
    IdealSpan span(rels, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(span.rank());
  }
}
BENCHMARK(BM_IdealSpan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
