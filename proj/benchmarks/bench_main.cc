#include <benchmark/benchmark.h>

#include "halftrans/actions.hpp"
#include "halftrans/catalog.hpp"
#include "halftrans/criteria.hpp"
#include "halftrans/linear_groups.hpp"
#include "halftrans/recipes.hpp"

using namespace halftrans;

static void BM_BuildRecipe(benchmark::State &state, char const *recipe)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(build_recipe(recipe).group.order());
}
BENCHMARK_CAPTURE(BM_BuildRecipe, psl2dih_32, "psl2dih:32");
BENCHMARK_CAPTURE(BM_BuildRecipe, sp6_2_on_36, "sp2forms:3:plus");
BENCHMARK_CAPTURE(BM_BuildRecipe, psl3_3_on_144, "singer:3:3");

static void BM_Suborbits(benchmark::State &state, char const *recipe)
{
  auto a = build_recipe(recipe);
  for (auto _ : state)
    benchmark::DoNotOptimize(suborbits(a));
}
BENCHMARK_CAPTURE(BM_Suborbits, psl2dih_32, "psl2dih:32");
BENCHMARK_CAPTURE(BM_Suborbits, psl3_4_on_280, "formsub:su:3:4");

static void BM_CosetAction(benchmark::State &state)
{
  auto l = psl_on_points(2, 16);
  auto h = dihedral_torus_subgroup(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(coset_action(l, h).degree());
}
BENCHMARK(BM_CosetAction);

static void BM_TripleFactorization(benchmark::State &state)
{
  auto a = build_recipe("psl2dih:32:5");
  auto h = point_stabilizer(a.group, a.basepoint);
  for (auto _ : state)
    benchmark::DoNotOptimize(triple_factorization_holds(a.group, h, 5));
}
BENCHMARK(BM_TripleFactorization);

static void BM_NativeCatalog(benchmark::State &state)
{
  auto entries = embedded_catalog();
  for (auto _ : state)
    benchmark::DoNotOptimize(run_suite(entries, "native", "").pass);
}
BENCHMARK(BM_NativeCatalog)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
