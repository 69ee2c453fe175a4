#include <benchmark/benchmark.h>

#include <string>

#include "circweb/catalog.hpp"
#include "circweb/jets.hpp"
#include "circweb/render.hpp"
#include "circweb/singular.hpp"
#include "circweb/webs.hpp"

using namespace circweb;

static void BM_JetComposite(benchmark::State& state) {
  using J = Jet2<double>;
  double x0 = 0.3, y0 = -0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x0);
    benchmark::DoNotOptimize(y0);
    const J x = J::var_x(x0), y = J::var_y(y0);
    J v = sin(x * y) / (1.0 + x * x) + sqrt(y * y + 0.5) * exp(x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_JetComposite);

static void BM_Evaluate(benchmark::State& state, const std::string& id) {
  const auto b = build(id);
  const auto& w = b.spec.window;
  const double s = 0.37 * w.xmin + 0.63 * w.xmax, t = 0.58 * w.ymin + 0.42 * w.ymax;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(b.web, s, t));
}
BENCHMARK_CAPTURE(BM_Evaluate, type05, std::string("type05"));
BENCHMARK_CAPTURE(BM_Evaluate, three_pencil, std::string("3p-hhe"));
BENCHMARK_CAPTURE(BM_Evaluate, rotation_orbit, std::string("R1"));

static void BM_Sweep(benchmark::State& state) {
  const auto b = build("type10");
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(b.web, b.spec.window, grid));
  state.SetItemsProcessed(state.iterations() * grid * grid);
}
BENCHMARK(BM_Sweep)->Arg(20)->Arg(80);

static void BM_SweepCatalog(benchmark::State& state) {
  for (auto _ : state) {
    double worst = 0;
    for (const auto& id : catalog_ids()) {
      if (!spec_of(id).expected_hexagonal) continue;
      const auto b = build(id);
      worst = std::max(worst, sweep(b.web, b.spec.window, 20).max_normalized());
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_SweepCatalog)->Unit(benchmark::kMillisecond);

static void BM_SingularCheck(benchmark::State& state) {
  const auto b = build("3p-hhe");
  for (auto _ : state)
    benchmark::DoNotOptimize(singular_circle_check(b.polar_lines[0], b.polar_lines[1], b.polar_lines[2]));
}
BENCHMARK(BM_SingularCheck)->Unit(benchmark::kMillisecond);

static void BM_Render(benchmark::State& state) {
  const auto b = build("type08");
  for (auto _ : state) benchmark::DoNotOptimize(render_web(b));
}
BENCHMARK(BM_Render)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
