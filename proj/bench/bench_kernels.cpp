#include <benchmark/benchmark.h>

#include "tautring/algebra.hpp"
#include "tautring/fz.hpp"
#include "tautring/series.hpp"

using namespace tautring;

namespace {

RSeries dense(int n) {
  TruncationSpec s = TruncationSpec().add(VariableId::t(), n).add(VariableId::x(), n);
  RSeries out(s);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.add_term({{VariableId::t(), i}, {VariableId::x(), j}}, frac(i + 2 * j + 1, i + 3));
  return out;
}

void multiply(benchmark::State& st, int threads) {
  RSeries a = dense(static_cast<int>(st.range(0)));
  RSeries b = a.scaled(frac(-3, 7));
  for (auto _ : st) benchmark::DoNotOptimize(RSeries::multiply(a, b, threads));
}

void BM_MultiplySerial(benchmark::State& st) { multiply(st, 1); }
void BM_MultiplyParallel(benchmark::State& st) { multiply(st, 4); }

void BM_ExpLog(benchmark::State& st) {
  RSeries a = dense(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(series_exp(series_log(a + RSeries::constant(a.spec(), 1 - a.constant_term()))));
}

void BM_FzSpan(benchmark::State& st) {
  for (auto _ : st) {
    auto m = ideal_within_degree(family_relations_upto(Family::Fz, 8, 5), 5);
    benchmark::DoNotOptimize(rank(m));
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_ExpLog)->Arg(6)->Arg(10);
BENCHMARK(BM_FzSpan);

BENCHMARK_MAIN();
