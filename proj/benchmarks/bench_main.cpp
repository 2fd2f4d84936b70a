#include <benchmark/benchmark.h>

#include "qbt/fiber_check.hpp"
#include "qbt/groebner.hpp"
#include "qbt/hm.hpp"
#include "qbt/random.hpp"
#include "qbt/representation.hpp"

using namespace qbt;

namespace {

const Field kFp = Field::prime(kDefaultPrime);

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(kFp, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(kFp);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_HomBasis(benchmark::State& state) {
  const long long b = state.range(0);
  const auto r = random_representation(kronecker(3), {b / 2, b}, 2, kFp);
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(r, r));
}
BENCHMARK(BM_HomBasis)->Arg(4)->Arg(8)->Arg(16);

void BM_GroebnerEmptiness(benchmark::State& state) {
  const Field q;
  const auto s = [&](const char* t) { return HomogeneousPoly::parse(q, 2, 2, t); };
  const std::vector<HomogeneousPoly> gens{s("x0^2 + x1^2 - x2^2"), s("x0*x1 - 2*x2^2"), s("x1^2 + 3*x0*x2")};
  for (auto _ : state) benchmark::DoNotOptimize(certified_empty_projective_locus(gens));
}
BENCHMARK(BM_GroebnerEmptiness);

void BM_HmVerify(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hm_verify(p, 20, 0).passed());
}
BENCHMARK(BM_HmVerify)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
