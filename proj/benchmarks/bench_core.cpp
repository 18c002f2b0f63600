#include <benchmark/benchmark.h>

#include "lhuilier/basis.hpp"
#include "lhuilier/closed_forms.hpp"
#include "lhuilier/solver.hpp"

namespace {

using namespace lhuilier;

void BM_BuildPresentation(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(build_presentation(n));
}
BENCHMARK(BM_BuildPresentation)->Arg(60)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_SearchLevel(benchmark::State& state) {
    const auto N = state.range(0);
    const auto spec = DenominatorSpec::make_max_lcm(N);
    presentation(N);
    for (auto _ : state) benchmark::DoNotOptimize(search_level(spec, N, 1));
}
BENCHMARK(BM_SearchLevel)->Arg(60)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
    const std::int64_t level = 420;
    for (auto _ : state)
        for (std::int64_t a = 1; a < level; ++a)
            if (gcd64(a, level) == 1) benchmark::DoNotOptimize(closed_form(level, a));
}
BENCHMARK(BM_ClosedForm)->Unit(benchmark::kMillisecond);

void BM_GenericRepresentation(benchmark::State& state) {
    const std::int64_t level = 420;
    presentation(level);
    for (auto _ : state)
        for (std::int64_t a = 1; a < level; ++a)
            if (gcd64(a, level) == 1) benchmark::DoNotOptimize(represent(level, a).restrict_to_level(level));
}
BENCHMARK(BM_GenericRepresentation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
