#include <benchmark/benchmark.h>

#include "liespec/crosscheck.hpp"
#include "liespec/numtheory.hpp"
#include "liespec/spectrum.hpp"

namespace {

using namespace liespec;

void BM_EnumerateSpectrum(benchmark::State& state) {
  const auto group = spectrum::all_groups()[static_cast<std::size_t>(state.range(0))];
  const BigRat cutoff = state.range(1);
  for (auto _ : state) {
    auto entries = spectrum::enumerate_spectrum(group, cutoff);
    benchmark::DoNotOptimize(entries);
  }
}
BENCHMARK(BM_EnumerateSpectrum)
    ->ArgsProduct({{0, 2, 4}, {4, 16, 64}})
    ->Unit(benchmark::kMillisecond);

void BM_TopTen(benchmark::State& state) {
  const auto group = spectrum::all_groups()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    auto entries = spectrum::top_n(group, 10);
    benchmark::DoNotOptimize(entries);
  }
}
BENCHMARK(BM_TopTen)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_WeylDimension(benchmark::State& state) {
  const spectrum::NuVector nu{7, 3, 5, 2};
  for (auto _ : state) {
    auto d = spectrum::weyl_dimension(rootsys::RootFamily::B4, nu);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_WeylDimension);

void BM_StrictFourSquares(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(numtheory::count_strict(numtheory::FormId::FourSquares, k));
}
BENCHMARK(BM_StrictFourSquares)->Arg(180)->Arg(1999)->Arg(1800);

void BM_BruteForceFourSquares(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        numtheory::brute_force_count(numtheory::FormId::FourSquares, k, numtheory::CountKind::AllInteger));
}
BENCHMARK(BM_BruteForceFourSquares)->Arg(180)->Arg(1999);

void BM_ClassNumber(benchmark::State& state) {
  const long long d = -4 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(numtheory::class_number(d));
}
BENCHMARK(BM_ClassNumber)->Arg(1998)->Arg(1999)->Arg(2000);

void BM_Characterize(benchmark::State& state) {
  const BigRat lambda(-31, 12);
  for (auto _ : state) {
    auto res = crosscheck::characterize(spectrum::GroupId::SO8, lambda);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Characterize);

}  // namespace

BENCHMARK_MAIN();
