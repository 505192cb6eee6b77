#include <benchmark/benchmark.h>

#include "hsamuel/reference.hpp"

using namespace hsamuel;

namespace {

using I32 = Ideal<PrimeField>;

RingSpecPtr<PrimeField> ring(int nv) {
  const std::vector<std::string> names{"X", "Y", "Z", "W"};
  return make_ring_spec(PrimeField(), {names.begin(), names.begin() + nv}, nv);
}

/// A non-monomial m-primary ideal, so the standard basis path is exercised.
I32 generic_ideal(int nv) {
  if (nv == 2) return I32::parse(ring(2), {"X^2 - Y^3", "X*Y^2", "Y^4"});
  return I32::parse(ring(3), {"X^2 + Y^3", "Y^2 + Z^3", "Z^2 + X^3"});
}

}  // namespace

static void BM_PowerLengthMonomial(benchmark::State& state) {
  auto m = I32::maximal(ring(3));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    I32 fresh = I32::parse(m.ring(), {"X", "Y", "Z"});
    benchmark::DoNotOptimize(fresh.power(n).length().value);
  }
}
BENCHMARK(BM_PowerLengthMonomial)->Arg(4)->Arg(8)->Arg(12);

static void BM_PowerLengthGeneric(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    I32 I = generic_ideal(nv);
    benchmark::DoNotOptimize(I.power(n).length().value);
  }
}
BENCHMARK(BM_PowerLengthGeneric)->Args({2, 3})->Args({2, 5})->Args({3, 2})->Args({3, 3});

static void BM_HilbertFit(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  for (auto _ : state) {
    I32 I = generic_ideal(nv);
    benchmark::DoNotOptimize(hilbert_data(Filtration<PrimeField>::adic(I)).e);
  }
}
BENCHMARK(BM_HilbertFit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MinimalReduction(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  for (auto _ : state) {
    I32 I = generic_ideal(nv);
    benchmark::DoNotOptimize(minimal_reduction(I).r);
  }
}
BENCHMARK(BM_MinimalReduction)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MonomialClosure(benchmark::State& state) {
  auto R = ring(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    I32 I = I32::parse(R, {"X^4", "X*Y^2", "Y^3*Z", "Z^5"});
    benchmark::DoNotOptimize(monomial_closure(I.power(n)).gens().size());
  }
}
BENCHMARK(BM_MonomialClosure)->Arg(1)->Arg(2)->Arg(3);

static void BM_RatliffRush(benchmark::State& state) {
  auto R = ring(2);
  for (auto _ : state) {
    I32 I = I32::parse(R, {"X^4", "X^3*Y", "X*Y^3", "Y^4"});
    benchmark::DoNotOptimize(ratliff_rush(I, 2).equals_power);
  }
}
BENCHMARK(BM_RatliffRush)->Unit(benchmark::kMillisecond);

static void BM_TheoremChecks(benchmark::State& state) {
  for (auto _ : state) {
    Analysis<PrimeField> a(I32::maximal(ring(2)).power(2), {});
    benchmark::DoNotOptimize(check_all(a).size());
  }
}
BENCHMARK(BM_TheoremChecks)->Unit(benchmark::kMillisecond);

static void BM_ReferenceSmallExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference_e2_zero(PrimeField()).ok());
}
BENCHMARK(BM_ReferenceSmallExample)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
