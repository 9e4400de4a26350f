#include <random>

#include <benchmark/benchmark.h>

#include <entwine/entwine.hpp>

using namespace entwine;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(f, dist(rng));
  return m;
}

void BM_RankRationals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(FieldSpec::rationals(), n, n + 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRationals)->Arg(8)->Arg(16)->Arg(32);

void BM_NullspacePrime(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(FieldSpec::prime(1000003), n, 2 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NullspacePrime)->Arg(8)->Arg(32)->Arg(64);

using Decider = Decision (*)(const StructureBundle&);

void BM_Decide(benchmark::State& state, Decider decide, const char* name) {
  const auto b = catalog_build(name);
  for (auto _ : state) benchmark::DoNotOptimize(decide(b).outcome);
}

Decision frobenius_default(const StructureBundle& b) { return decide_frobenius(b); }

BENCHMARK_CAPTURE(BM_Decide, sep_F_matrix_coalg, decide_sep_F, "matrix-coalg-2obj");
BENCHMARK_CAPTURE(BM_Decide, sep_F_nonsep, decide_sep_F, "nonsep-F");
BENCHMARK_CAPTURE(BM_Decide, sep_G_group_q, decide_sep_G, "group-c2-q");
BENCHMARK_CAPTURE(BM_Decide, sep_G_path, decide_sep_G, "path-a2");
BENCHMARK_CAPTURE(BM_Decide, frobenius_dual_numbers, frobenius_default, "dual-numbers-q");
BENCHMARK_CAPTURE(BM_Decide, frobenius_local_3dim, frobenius_default, "local-3dim-f2");
BENCHMARK_CAPTURE(BM_Decide, cointegral_group_q, find_cointegral, "group-c2-q");
BENCHMARK_CAPTURE(BM_Decide, cointegral_matrix_coalg, find_cointegral, "matrix-coalg-2obj");

}  // namespace

BENCHMARK_MAIN();
