// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "ternary/kernels.hpp"
#include "ternary/point_scan.hpp"
#include "ternary/poly.hpp"
#include "ternary/random.hpp"

using namespace ternary;

namespace {

std::vector<mpz_class> int_matrix(std::size_t n) {
  Rng rng(n);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<mpz_class> a(n * n);
  for (auto& x : a) x = d(rng);
  return a;
}

std::vector<std::uint64_t> mod_matrix(std::size_t n, std::uint64_t p) {
  Rng rng(n);
  std::vector<std::uint64_t> a(n * n);
  for (auto& x : a) x = rng() % p;
  return a;
}

// A smooth-looking sextic, so the scan visits every point.
MultiPoly sextic(std::uint64_t p) {
  Rng rng(6);
  return random_form(rng, VarSet::xyz(), Domain::prime_field(p), 6);
}

void BM_BareissSerial(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  const auto a = int_matrix(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::det_bareiss_serial(a, n));
}

void BM_BareissParallel(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  const auto a = int_matrix(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::det_bareiss_parallel(a, n));
}

void BM_ModpSerial(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  const auto a = mod_matrix(n, 10007);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::det_modp_serial(a, n, 10007));
}

void BM_ModpParallel(benchmark::State& s) {
  const auto n = static_cast<std::size_t>(s.range(0));
  const auto a = mod_matrix(n, 10007);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::det_modp_parallel(a, n, 10007));
}

void BM_SingularScanSerial(benchmark::State& s) {
  const MultiPoly f = sextic(static_cast<std::uint64_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::find_singular_point_serial(f, 2));
}

void BM_SingularScanParallel(benchmark::State& s) {
  const MultiPoly f = sextic(static_cast<std::uint64_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::find_singular_point_parallel(f, 2));
}

}  // namespace

// 36 and 105 are the Macaulay matrix sides for quartic and sextic discriminants.
BENCHMARK(BM_BareissSerial)->Arg(36)->Arg(105)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissParallel)->Arg(36)->Arg(105)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModpSerial)->Arg(105)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModpParallel)->Arg(105)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularScanSerial)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularScanParallel)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
