#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "crofton/codecs.hpp"
#include "crofton/mcint.hpp"
#include "crofton/plane.hpp"

using namespace crofton;

namespace {

Execution exec_of(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

PlaneCurveInput rose(int m) {
    // r = cos(3θ/2) traced twice over: many double points
    std::vector<Vec2> v;
    for (int k = 0; k < m; ++k) {
        const double t = 4 * std::numbers::pi * (k + 0.37) / m;
        const double r = 1.2 + std::cos(1.5 * t);
        v.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return make_plane_curve(std::move(v));
}

SpaceCurve torus(int m) {
    BuiltinSpaceCurve b;
    b.name = "torus_knot";
    b.samples = m;
    return resolve_space_curve(SpaceCurveInput{b});
}

void BM_AnalyzeCurve(benchmark::State& s) {
    const PlaneCurveInput c = rose(4000);
    for (auto _ : s) benchmark::DoNotOptimize(analyze_curve(c, exec_of(s)));
}

void BM_Separations(benchmark::State& s) {
    const SpaceCurve g = torus(3000);
    for (auto _ : s) benchmark::DoNotOptimize(detail::separations(g, exec_of(s)));
}

void BM_Iy(benchmark::State& s) {
    const SpaceCurve g = torus(256);
    McConfig cfg;
    cfg.samples = 200000;
    cfg.exec = exec_of(s);
    for (auto _ : s) benchmark::DoNotOptimize(mc_iy(g, cfg));
}

void BM_Ix(benchmark::State& s) {
    const SpaceCurve g = torus(256);
    McConfig cfg;
    cfg.samples = 200000;
    cfg.exec = exec_of(s);
    for (auto _ : s) benchmark::DoNotOptimize(mc_ix(g, cfg));
}

}  // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_AnalyzeCurve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Separations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Iy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
