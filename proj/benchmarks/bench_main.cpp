#include <benchmark/benchmark.h>

#include "umbilic/rotational.hpp"
#include "umbilic/sampling.hpp"

namespace {

using namespace umbilic;

SpacelikeSubspace substantial(const ModelContext& ctx, int p, Rng& rng) {
  for (;;) {
    auto v = random_spacelike_subspace(ctx, p, rng);
    if (is_substantial(ctx, v)) return v;
  }
}

void BM_SymEigs(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  std::normal_distribution<double> normal;
  Matrix a(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) a(i, j) = normal(rng);
  const Matrix g = a + a.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigs(g));
}
BENCHMARK(BM_SymEigs)->Arg(2)->Arg(4)->Arg(8);

void BM_AreCongruent(benchmark::State& state) {
  const auto ctx = ModelContext::standard(5, 3);
  Rng rng(2);
  const auto a = substantial(ctx, static_cast<int>(state.range(0)), rng);
  const auto b = a.transformed(random_block_isometry(ctx, 3));
  for (auto _ : state) benchmark::DoNotOptimize(are_congruent(ctx, a, b));
}
BENCHMARK(BM_AreCongruent)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildBlockIsometry(benchmark::State& state) {
  const auto ctx = ModelContext::standard(5, 3);
  Rng rng(4);
  const auto a = substantial(ctx, static_cast<int>(state.range(0)), rng);
  const auto b = a.transformed(random_block_isometry(ctx, 5));
  for (auto _ : state) benchmark::DoNotOptimize(build_block_isometry(ctx, a, b));
}
BENCHMARK(BM_BuildBlockIsometry)->Arg(1)->Arg(2)->Arg(3);

void BM_ProfileCurve(benchmark::State& state) {
  const auto ctx = ModelContext::standard(3, 3);
  EVec c = EVec::Zero(4);
  c(3) = 1.0;
  const auto spec = make_spec(ctx, {Sphere{c, 0.5}});
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(profile_curve(ctx, spec, samples));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_ProfileCurve)->Arg(64)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
