// Microbenchmarks for the hot paths: prime sieving, Kronecker symbols,
// Hurwitz zeta / Dirichlet L evaluation, class-group construction, family
// enumeration, and one full explicit-formula prime side.

#include <benchmark/benchmark.h>

#include "twistlab/efterms.hpp"

using namespace twistlab;

static void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) {
    PrimeTable pt(state.range(0));
    benchmark::DoNotOptimize(pt.primes().size());
  }
}
BENCHMARK(BM_Sieve)->Arg(100000)->Arg(2000000);

static void BM_Kronecker(benchmark::State& state) {
  i64 acc = 0, a = -1411;
  i64 n = 1;
  for (auto _ : state) {
    n += 2;
    acc += kronecker(a, n);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Kronecker);

static void BM_HurwitzZeta(benchmark::State& state) {
  cplx s(0.5, 10.0);
  double a = 0.0;
  for (auto _ : state) {
    a += 1.0 / 4096.0;
    if (a >= 1.0) a -= 1.0 - 1.0 / 8192.0;
    benchmark::DoNotOptimize(hurwitz_zeta(s, a));
  }
}
BENCHMARK(BM_HurwitzZeta);

static void BM_DirichletL(benchmark::State& state) {
  cplx s(0.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_L(s, -static_cast<i64>(state.range(0))));
  }
}
BENCHMARK(BM_DirichletL)->Arg(15)->Arg(1411);

static void BM_ClassGroup(benchmark::State& state) {
  PrimeTable pt(5000);
  for (auto _ : state) {
    auto G = class_group(state.range(0), pt);
    benchmark::DoNotOptimize(G.h);
  }
}
BENCHMARK(BM_ClassGroup)->Arg(15)->Arg(1411)->Arg(9240);

static void BM_EnumerateFamily(benchmark::State& state) {
  PrimeTable pt(5000);
  for (auto _ : state) {
    auto fam = enumerate_family(15, state.range(0), pt);
    benchmark::DoNotOptimize(fam.xstar);
  }
}
BENCHMARK(BM_EnumerateFamily)->Arg(1000)->Arg(100000);

static void BM_PrimeSideFamily(benchmark::State& state) {
  PrimeTable pt(200000);
  auto tf = fejer_pair(1.0);
  auto fam = enumerate_family(15, 100, pt);
  GenusCharacter psi{5, -3};
  for (auto _ : state) {
    auto r = ef_balance(fam, psi, tf, 30.0, pt, nullptr, false);
    benchmark::DoNotOptimize(r.odd);
  }
}
BENCHMARK(BM_PrimeSideFamily);

BENCHMARK_MAIN();
