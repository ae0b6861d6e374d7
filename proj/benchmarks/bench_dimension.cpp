#include <benchmark/benchmark.h>

#include <l2inv/alpha.hpp>
#include <l2inv/dimension.hpp>
#include <l2inv/registry.hpp>

#include <random>

using namespace l2inv;

namespace {

RingMatrix random_cyclic_matrix(long order, int n, std::mt19937_64& rng) {
  const auto g = Group::cyclic(order);
  std::uniform_int_distribution<long long> idx(0, order - 1), coeff(-4, 4);
  RingMatrix m(g, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RingElem e(g);
      for (int t = 0; t < 4; ++t) {
        const Rational c(coeff(rng));
        if (c != 0) e.add_term(GroupElement::finite(idx(rng)), c);
      }
      m.at(i, j) = e;
    }
  return m;
}

RingMatrix random_laurent_matrix(int rank, int n, std::mt19937_64& rng) {
  const auto g = Group::free_abelian(rank);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  RingMatrix m(g, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RingElem e(g);
      for (int t = 0; t < 3; ++t) {
        std::vector<int> v(static_cast<std::size_t>(rank));
        for (auto& x : v) x = expo(rng);
        const Rational c(coeff(rng));
        if (c != 0) e.add_term(GroupElement::exponents(v), c);
      }
      m.at(i, j) = e;
    }
  return m;
}

}  // namespace

static void BM_FiniteKernelByOrder(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const RingMatrix a = random_cyclic_matrix(state.range(0), 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dim_ker_finite(a));
  }
}
BENCHMARK(BM_FiniteKernelByOrder)->Arg(16)->Arg(64)->Arg(256);

static void BM_GenericRankByVariables(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const RingMatrix a = random_laurent_matrix(static_cast<int>(state.range(0)), 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dim_ker_abelian(a));
  }
}
BENCHMARK(BM_GenericRankByVariables)->Arg(1)->Arg(2)->Arg(3);

static void BM_SampledKernel(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const RingMatrix a = random_laurent_matrix(2, 3, rng);
  SampleOptions opt;
  opt.samples = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dim_ker_sampled(a, opt));
  }
}
BENCHMARK(BM_SampledKernel)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_TowerLevels(benchmark::State& state) {
  std::mt19937_64 rng(14);
  const auto z = Group::free_abelian(1);
  const RingMatrix a = random_laurent_matrix(1, 2, rng);
  const QuotientTower tower = resolve_tower(z, "cyclic:2:" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dim_ker_approx(a, tower));
  }
}
BENCHMARK(BM_TowerLevels)->Arg(64)->Arg(256)->Arg(1024);

static void BM_AlphaEnclosure(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_enclosure_terms(2, 2, state.range(0)));
  }
}
BENCHMARK(BM_AlphaEnclosure)->Arg(64)->Arg(128)->Arg(256);

static void BM_MinDenominatorDescent(benchmark::State& state) {
  const RationalInterval iv = alpha_enclosure_terms(2, 2, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_denominator_in_interval(iv));
  }
}
BENCHMARK(BM_MinDenominatorDescent)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
