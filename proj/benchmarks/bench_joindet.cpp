#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "joindet/digraph.hpp"
#include "joindet/int_matrix.hpp"
#include "joindet/join_algebra.hpp"
#include "joindet/random_graphs.hpp"

using namespace joindet;

namespace {

Digraph self_chain(const Digraph& g, long long joins, int arity) {
  Digraph acc = g;
  for (long long i = 0; i < joins; ++i) acc = j_join(acc, g, arity);
  return acc;
}

void BM_DetExactAdjacency(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Digraph g = random_digraph(rng, static_cast<int>(state.range(0)), 400);
  const IntMatrix a = adjacency_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(a));
}
BENCHMARK(BM_DetExactAdjacency)->Arg(16)->Arg(64)->Arg(128)->Arg(256);

void BM_DetExactWideEntries(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const long long n = state.range(0);
  IntMatrix a(n, n);
  const mpz_class scale("340282366920938463463374607431768211456");  // 2^128
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      a.at(i, j) = scale * random_int(rng, -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(a));
}
BENCHMARK(BM_DetExactWideEntries)->Arg(8)->Arg(16)->Arg(32);

void BM_Phi(benchmark::State& state) {
  const Digraph g = make_complete(8);
  const int arity = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, arity));
}
BENCHMARK(BM_Phi)->Arg(1)->Arg(2)->Arg(3);

void BM_PhiWorkers(benchmark::State& state) {
  const Digraph g = make_complete(10);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, 3, workers));
}
BENCHMARK(BM_PhiWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ChainTransfer(benchmark::State& state) {
  const std::vector<Digraph> copies(static_cast<std::size_t>(state.range(0)),
                                    make_complete(5));
  for (auto _ : state) benchmark::DoNotOptimize(chain_det(copies, 1));
}
BENCHMARK(BM_ChainTransfer)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_ChainNaive(benchmark::State& state) {
  const Digraph whole = self_chain(make_complete(5), state.range(0) - 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(graph_det(whole));
}
BENCHMARK(BM_ChainNaive)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_SandwichPower(benchmark::State& state) {
  const IntMatrix a = phi(make_complete(5), 1);
  const IntMatrix e = build_sign_matrix(1);
  const unsigned long long n = static_cast<unsigned long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sandwich_power(a, e, n));
}
BENCHMARK(BM_SandwichPower)->Arg(1000)->Arg(1000000)->Arg(1000000000);

}  // namespace

BENCHMARK_MAIN();
