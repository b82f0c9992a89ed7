#include <benchmark/benchmark.h>

#include "gwdesc/engine.hpp"
#include "gwdesc/fixtures.hpp"
#include "gwdesc/moduli.hpp"
#include "gwdesc/phase_space.hpp"

using namespace gwdesc;

namespace {

CurveClass deg(std::int64_t d) { return CurveClass(std::vector<std::int64_t>{d}); }

// Cold cache each iteration.
void BM_PlaneCurveCount(benchmark::State& state)
{
    const auto f = load_fixture("P2");
    const auto d = state.range(0);
    const std::vector<Insertion> ins(static_cast<std::size_t>(3 * d - 1), tau(0, std::size_t{2}));
    for (auto _ : state) {
        Engine engine(f.model, f.table);
        benchmark::DoNotOptimize(engine.descendant_correlator(0, deg(d), ins));
    }
}
BENCHMARK(BM_PlaneCurveCount)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DescendantP2(benchmark::State& state)
{
    const auto f = load_fixture("P2");
    EngineOptions o;
    o.use_cache = state.range(0) != 0;
    const std::vector<Insertion> ins{tau(3, std::size_t{1}), tau(2, std::size_t{1}), tau(1, std::size_t{1}),
                                     tau(0, std::size_t{2}), tau(0, std::size_t{2})};
    for (auto _ : state) {
        Engine engine(f.model, f.table, o);
        benchmark::DoNotOptimize(engine.descendant_correlator(0, deg(3), ins));
    }
}
BENCHMARK(BM_DescendantP2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PointModified(benchmark::State& state)
{
    const auto f = load_fixture("point");
    const int n = static_cast<int>(state.range(0));
    std::vector<Insertion> ins(static_cast<std::size_t>(n), tau(0, std::size_t{0}));
    for (int i = 0; i < n - 3; ++i) {
        ins[static_cast<std::size_t>(i % n)].e += 1;
    }
    for (auto _ : state) {
        Engine engine(f.model, f.table);
        benchmark::DoNotOptimize(engine.modified_correlator(CurveClass(), ins));
    }
}
BENCHMARK(BM_PointModified)->DenseRange(5, 8);

void BM_Transform(benchmark::State& state)
{
    const auto f = load_fixture(state.range(0) == 1 ? "P1" : "P2");
    for (auto _ : state) {
        Engine engine(f.model, f.table);
        PhaseSpace ps(engine, {3, 4, 3});
        benchmark::DoNotOptimize(PhaseSpace::invert_T(ps.build_T()));
    }
}
BENCHMARK(BM_Transform)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PotentialIdentity(benchmark::State& state)
{
    const auto f = load_fixture("P2");
    for (auto _ : state) {
        Engine engine(f.model, f.table);
        PhaseSpace ps(engine, {3, 4, 3});
        benchmark::DoNotOptimize(ps.verify_theorem22());
    }
}
BENCHMARK(BM_PotentialIdentity)->Unit(benchmark::kMillisecond);

void BM_PsiIntegral(benchmark::State& state)
{
    const std::vector<int> d{3, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi_integral_genus0(d));
    }
}
BENCHMARK(BM_PsiIntegral);

} // namespace

BENCHMARK_MAIN();
