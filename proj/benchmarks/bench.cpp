#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "fc/elimination.hpp"
#include "fc/modp.hpp"
#include "fc/poly.hpp"
#include "fc/prime_sums.hpp"
#include "fc/primes.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc::PrimeTable::sieve(limit).size());
}
BENCHMARK(BM_Sieve)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_OmegaQuartic(benchmark::State& state) {
  const fc::IntPoly f = fc::parse_poly("x^4+4*x^3+2*x^2+1");
  const auto primes = fc::PrimeTable::sieve(10'000).primes();
  for (auto _ : state) benchmark::DoNotOptimize(fc::omega_values(f, primes));
}
BENCHMARK(BM_OmegaQuartic)->Unit(benchmark::kMillisecond);

void BM_Resultant(benchmark::State& state) {
  // Two dense polynomials of equal degree with small coefficients.
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<mpz_class> a(n + 1), b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    a[i] = static_cast<long>((i * 7 + 3) % 11) - 5;
    b[i] = static_cast<long>((i * 5 + 1) % 13) - 6;
  }
  a[n] = 1;
  b[n] = 2;
  const fc::IntPoly f(a), g(b);
  for (auto _ : state) benchmark::DoNotOptimize(fc::resultant(f, g));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_FValueExact(benchmark::State& state) {
  const fc::IntPoly f = fc::parse_poly("x^4-5*x^2+4");
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc::f_value(f, x, fc::SumMode::exact).value.to_double());
}
BENCHMARK(BM_FValueExact)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FValueFloating(benchmark::State& state) {
  const fc::IntPoly f = fc::parse_poly("x^4-5*x^2+4");
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc::f_value(f, x, fc::SumMode::floating).value.to_double());
}
BENCHMARK(BM_FValueFloating)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
