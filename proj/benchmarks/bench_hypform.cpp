#include "support.hpp"

#include <hypform/enumerate.hpp>

#include <benchmark/benchmark.h>

using namespace hypform;
namespace ht = hypform::testing;

static void BM_Rref(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  ht::Rng rng(1);
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.set_row(i, ht::random_vector(rng, d, 9));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->DenseRange(4, 12, 4);

static void BM_EnumerateSp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_validate(FormKind::sp, n, n).pass);
}
BENCHMARK(BM_EnumerateSp)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSo(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_validate(FormKind::so, n, n).pass);
}
BENCHMARK(BM_EnumerateSo)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// W2 = g W1 for a random integral g in the group
template <FormKind kind>
static void BM_Transport(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FormSpace space(kind, n);
  ht::Rng rng(7);
  std::vector<std::pair<Subspace, Subspace>> pairs;
  for (int i = 0; i < 16; ++i) {
    Subspace w1 = ht::random_subspace(rng, 2 * n, static_cast<std::size_t>(ht::uniform(rng, 1, 2 * static_cast<long>(n) - 1)));
    pairs.emplace_back(w1, image(ht::random_group_element(rng, space), w1));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [w1, w2] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(transport(space, w1, w2).verified);
  }
}
BENCHMARK(BM_Transport<FormKind::sp>)->Name("BM_TransportSp")->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Transport<FormKind::so>)->Name("BM_TransportSo")->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

template <FormKind kind>
static void BM_Arrange(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FormSpace space(kind, n);
  ht::Rng rng(11);
  std::vector<std::pair<Subspace, Subspace>> pairs;
  while (pairs.size() < 16) {
    auto p = ht::correlated_pair(rng, 2 * n);
    if (!ht::lagrangian_obstruction(space, p.first, p.second)) pairs.push_back(p);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [w1, w2] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(arrange(space, w1, w2).verified);
  }
}
BENCHMARK(BM_Arrange<FormKind::sp>)->Name("BM_ArrangeSp")->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Arrange<FormKind::so>)->Name("BM_ArrangeSo")->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CatMapBands(benchmark::State& state) {
  ToralMap cat = ToralMap::from_longs({{2, 1}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_bands(cat, static_cast<unsigned>(state.range(0))).s);
}
BENCHMARK(BM_CatMapBands)->Arg(64)->Arg(256)->Arg(1024);

static void BM_Hyperbolicity(benchmark::State& state) {
  ht::Rng rng(3);
  std::vector<ToralMap> maps;
  for (int i = 0; i < 32; ++i) maps.push_back(ht::random_unimodular(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolicity(maps[i++ % maps.size()]));
}
BENCHMARK(BM_Hyperbolicity)->DenseRange(2, 6, 2);

static void BM_SearchSp4(benchmark::State& state) {
  std::vector<ToralMap> gens = sp4_generators();
  for (auto _ : state)
    benchmark::DoNotOptimize(search_words(gens, static_cast<std::size_t>(state.range(0)), WordPredicate::hyperbolic).size());
}
BENCHMARK(BM_SearchSp4)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
