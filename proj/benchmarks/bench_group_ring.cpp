#include <benchmark/benchmark.h>

#include <l2inv/group_ring.hpp>

#include <random>

using namespace l2inv;

namespace {

RingElem dense_elem(const Group::Ptr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coeff(-9, 9);
  RingElem e(g);
  for (long i = 0; i < g->order(); ++i) {
    const Rational c(coeff(rng));
    if (c != 0) e.add_term(GroupElement::finite(i), c);
  }
  return e;
}

RingMatrix dense_matrix(const Group::Ptr& g, int n, std::mt19937_64& rng) {
  RingMatrix m(g, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dense_elem(g, rng);
  return m;
}

}  // namespace

static void BM_ConvolutionByOrder(benchmark::State& state) {
  const auto g = Group::cyclic(state.range(0));
  std::mt19937_64 rng(1);
  const RingElem a = dense_elem(g, rng);
  const RingElem b = dense_elem(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_ConvolutionByOrder)->Arg(8)->Arg(32)->Arg(128);

static void BM_MatrixProduct(benchmark::State& state) {
  const auto g = Group::cyclic(12);
  std::mt19937_64 rng(2);
  const RingMatrix a = dense_matrix(g, static_cast<int>(state.range(0)), rng);
  const RingMatrix b = dense_matrix(g, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_MatrixProduct)->Arg(2)->Arg(4)->Arg(8);

static void BM_Star(benchmark::State& state) {
  const auto g = Group::cyclic(state.range(0));
  std::mt19937_64 rng(3);
  const RingElem a = dense_elem(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star(a));
  }
}
BENCHMARK(BM_Star)->Arg(32)->Arg(256);

static void BM_TraceOfGram(benchmark::State& state) {
  const auto g = Group::cyclic(16);
  std::mt19937_64 rng(4);
  const RingMatrix a = dense_matrix(g, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_gamma(adjoint(a) * a));
  }
}
BENCHMARK(BM_TraceOfGram)->Arg(2)->Arg(4);

static void BM_PushToQuotient(benchmark::State& state) {
  const auto z = Group::free_abelian(1);
  const auto zk = Group::cyclic(state.range(0));
  const QuotientHom q(z, zk, {1});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> expo(-6, 6);
  std::uniform_int_distribution<long long> coeff(-9, 9);
  RingElem a(z);
  for (int i = 0; i < 24; ++i) a.add_term(GroupElement::exponents({expo(rng)}), Rational(coeff(rng)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(push_to_quotient(a, q));
  }
}
BENCHMARK(BM_PushToQuotient)->Arg(4)->Arg(64);

BENCHMARK_MAIN();
