#include <benchmark/benchmark.h>

#include "kring/characters.hpp"
#include "kring/kmodel.hpp"
#include "kring/oracle/character_table.hpp"
#include "kring/rep_sn.hpp"
#include "kring/tau.hpp"
#include "kring/universal.hpp"
#include "kring/wreath.hpp"

using namespace kring;

static void BM_Plethysm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymFunc f = SymFunc::schur({n});
  const SymFunc g = SymFunc::schur({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(plethysm(f, g));
}
BENCHMARK(BM_Plethysm)->DenseRange(2, 4);

static void BM_ToSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SymFunc f = SymFunc::zero();
  for (const auto& p : partitions_of(n)) f += SymFunc::basis_element(Basis::monomial, p);
  for (auto _ : state) benchmark::DoNotOptimize(f.expand(Basis::schur));
}
BENCHMARK(BM_ToSchur)->DenseRange(6, 10, 2);

static void BM_CharacterColumn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = partitions_of(n);
  for (auto _ : state)
    for (const auto& lambda : all) benchmark::DoNotOptimize(mn_character(lambda, all.back()));
}
BENCHMARK(BM_CharacterColumn)->DenseRange(6, 12, 3);

static void BM_InductionProduct(benchmark::State& state) {
  const RepSn a = RepSn::regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(induction_product(a, a));
}
BENCHMARK(BM_InductionProduct)->DenseRange(2, 4);

static void BM_Tau(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const SymFunc x = SymFunc::schur({2}) + SymFunc::schur({1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tau(x, cap));
}
BENCHMARK(BM_Tau)->DenseRange(2, 5);

static void BM_TauDot(benchmark::State& state) {
  const auto t = tau(SymFunc::schur({2}), 6);
  for (auto _ : state) benchmark::DoNotOptimize(tau_dot(t, {{2, 3}}));
}
BENCHMARK(BM_TauDot);

static void BM_PowerMap(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  for (auto _ : state)
    for (const auto& v : partitions_of(l)) benchmark::DoNotOptimize(power_map(RepSn::irreducible(v), k));
}
BENCHMARK(BM_PowerMap)->Args({2, 2})->Args({2, 3})->Args({3, 2});

static void BM_UniversalQ(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(universal_q(k, 2));
}
BENCHMARK(BM_UniversalQ)->DenseRange(2, 4);

static void BM_RankTable(benchmark::State& state) {
  const CellComplex cx({Cell{"one", 0, true, false}, Cell{"x", 2, true, false}, Cell{"y", 2, true, false},
                        Cell{"xy", 4, false, false}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_table(cx, n));
}
BENCHMARK(BM_RankTable)->DenseRange(2, 8, 3);

static void BM_OracleSymmetricGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::build_symmetric(n));
}
BENCHMARK(BM_OracleSymmetricGroup)->DenseRange(4, 6);

static void BM_OracleInduce(benchmark::State& state) {
  const auto g = oracle::build_symmetric(6);
  const auto h = oracle::build_wreath(2, 3);
  const auto f = oracle::ClassFunction::constant(h, 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::induce(f, g));
}
BENCHMARK(BM_OracleInduce);
BENCHMARK_MAIN();
