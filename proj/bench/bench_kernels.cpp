#include <benchmark/benchmark.h>

#include "dkit/decomposition.hpp"
#include "dkit/random.hpp"
#include "dkit/verify.hpp"

using namespace dkit;
namespace k = dkit::kernels;

namespace {

k::Generators gens(std::size_t count, unsigned deg, std::uint64_t seed) {
  random::Rng rng(seed);
  auto R = RingContext::with_vars(8);
  k::Generators out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random::monomial(rng, R, 1, deg).exponents());
  return out;
}

k::Backend backend(const benchmark::State& st) { return st.range(1) ? k::Backend::Parallel : k::Backend::Serial; }

void BM_Products(benchmark::State& st) {
  auto a = gens(st.range(0), 4, 1), b = gens(st.range(0), 4, 2);
  for (auto _ : st) benchmark::DoNotOptimize(k::products(a, b, backend(st)));
  st.SetComplexityN(st.range(0));
}

void BM_Lcms(benchmark::State& st) {
  auto a = gens(st.range(0), 4, 3), b = gens(st.range(0), 4, 4);
  for (auto _ : st) benchmark::DoNotOptimize(k::lcms(a, b, backend(st)));
}

void BM_Minimalize(benchmark::State& st) {
  auto a = gens(st.range(0), 4, 5), b = gens(st.range(0), 4, 6);
  auto all = k::serial::products(a, b);
  for (auto _ : st) benchmark::DoNotOptimize(k::minimalize(all, backend(st)));
}

void BM_Decomposition(benchmark::State& st) {
  random::Rng rng(7);
  auto R = RingContext::with_vars(8);
  auto I = random::ideal(rng, R, st.range(0), 3);
  for (auto _ : st) benchmark::DoNotOptimize(irreducible_decomposition(I, backend(st)));
}

void BM_DemotionGrid(benchmark::State& st) {
  auto R = RingContext::with_vars(8);
  auto I = MonomialIdeal(R, {{0, 0, 1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0, 0}});
  auto J = ideal_intersection(I, MonomialIdeal(R, {{1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0}}));
  const auto b = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_demotion(I, J, b, b, backend(st)));
}

}  // namespace

BENCHMARK(BM_Products)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_Lcms)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_Minimalize)->ArgsProduct({{32, 128}, {0, 1}});
BENCHMARK(BM_Decomposition)->ArgsProduct({{6, 10, 14}, {0, 1}});
BENCHMARK(BM_DemotionGrid)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
