#include <benchmark/benchmark.h>

#include <hforge/hforge.hpp>

using namespace hforge;

namespace
{

std::vector<Permutation> alternating_generators(std::size_t d)
{
  Cycle long_cycle;
  for (Point x = (d % 2u == 0u ? 2u : 1u); x <= d; ++x)
    long_cycle.push_back(x);
  return {Permutation::from_cycles(d, {{1, 2, 3}}), Permutation::from_cycles(d, {long_cycle})};
}

} // namespace

void BM_SchreierSimsAlternating(benchmark::State &state)
{
  auto gens = alternating_generators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    PermGroup g(gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsAlternating)->Arg(8)->Arg(16)->Arg(32)->Arg(48)
  ->Unit(benchmark::kMillisecond);

void BM_PrimitivityCheck(benchmark::State &state)
{
  PermGroup g(alternating_generators(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_primitive(g));
}
BENCHMARK(BM_PrimitivityCheck)->Arg(16)->Arg(32);

void BM_NormalizeTuple(benchmark::State &state)
{
  auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(derive_seed(3, d));
  auto a = rng.three_cycle(d), b = rng.three_cycle(d);
  HurwitzTuple t(d, {a, b, (a * b).inverse()});
  for (auto _ : state)
    benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_NormalizeTuple)->Arg(6)->Arg(9)->Arg(16);

void BM_RefineToSimple(benchmark::State &state)
{
  auto infinity = canonical_infinity_permutation(CoverShape(1, {5, 4}));
  Rng rng(derive_seed(5, 16));
  HurwitzTuple t(16, {});
  do {
    auto b = rng.three_cycle(16) * rng.three_cycle(16);
    t = HurwitzTuple(16, {infinity, b, (infinity * b).inverse()});
  } while (!is_even_tuple(t) || !validate(t).positive());
  for (auto _ : state)
    benchmark::DoNotOptimize(refine_to_simple(t));
}
BENCHMARK(BM_RefineToSimple);

void BM_SearchDegreeFive(benchmark::State &state)
{
  SearchOptions opts;
  opts.allow_genus_zero = true;
  for (auto _ : state) {
    opts.seed++;
    benchmark::DoNotOptimize(search_simple_odd_tuple(CoverShape(0, {3}), opts));
  }
}
BENCHMARK(BM_SearchDegreeFive);

void BM_SearchDegreeSixteen(benchmark::State &state)
{
  SearchOptions opts;
  opts.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(search_simple_odd_tuple(CoverShape(1, {5, 4}), opts));
}
BENCHMARK(BM_SearchDegreeSixteen)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
