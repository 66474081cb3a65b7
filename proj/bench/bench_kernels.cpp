#include <benchmark/benchmark.h>

#include "sparrow/evaluation.hpp"
#include "sparrow/perception.hpp"
#include "sparrow/render.hpp"

namespace {

using namespace sparrow;

const Rendered& frame() {
  static const Rendered r = [] {
    RenderParams p;
    p.width = 960;
    p.height = 720;
    p.noise = NoiseModel::field();
    return render_field(default_row_scenario(), p);
  }();
  return r;
}

const BinaryMask& mask() {
  static const BinaryMask m = segment(frame().image).mask;
  return m;
}

void BM_BlurParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gaussian_blur(frame().image, 1.5));
}
void BM_BlurSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::gaussian_blur(frame().image, 1.5));
}
void BM_ExgParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(excess_green(frame().image));
}
void BM_ExgSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::excess_green(frame().image));
}
void BM_MorphSeparable(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(morphology(mask(), MorphOp::Erode, k, 1));
}
void BM_MorphDirect(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::morphology(mask(), MorphOp::Erode, k, 1));
}
void BM_Pipeline(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_pipeline(frame().image));
}
void BM_TriangleScan(benchmark::State& st) {
  const BinaryMask roi = crop_bottom(mask(), 0.6);
  for (auto _ : st) benchmark::DoNotOptimize(triangle_scan(roi));
}

EvalConfig eval_config(std::size_t n_max) {
  EvalConfig cfg;
  cfg.trials = 64;
  cfg.n_min = 5;
  cfg.n_max = n_max;
  return cfg;
}
void BM_EvaluateParallel(benchmark::State& st) {
  const EvalConfig cfg = eval_config(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_planners(cfg));
}
void BM_EvaluateSerial(benchmark::State& st) {
  const EvalConfig cfg = eval_config(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_planners_serial(cfg));
}

BENCHMARK(BM_BlurParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlurSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExgParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExgSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MorphSeparable)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MorphDirect)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleScan)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  // Build the shared fixtures outside any timed region.
  (void)mask();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
