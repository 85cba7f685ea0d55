#include <benchmark/benchmark.h>

#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/model.hpp"
#include "nmaw/genomics/batch.hpp"
#include "nmaw/genomics/snake.hpp"
#include "nmaw/io/generate.hpp"
#include "nmaw/stencil/hdiff.hpp"
#include "nmaw/stencil/vadvc.hpp"

namespace {

using namespace nmaw;

// Fused filter over one 100 bp pair at a time; arg = edit threshold.
void BM_FilterPair(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  const auto batch = io::generate_pairs(4096, 100, {0, 10, 0.6, 0.2, 0.2}, 42);
  genomics::PairFilter filter(e);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = batch[i++ % batch.size()];
    benchmark::DoNotOptimize(filter(p.reference, p.query));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FilterPair)->Arg(2)->Arg(5)->Arg(10);

// Whole batch; arg = worker threads.
void BM_FilterBatch(benchmark::State& state) {
  const auto batch = io::generate_pairs(30000, 100, {0, 10, 0.6, 0.2, 0.2}, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        genomics::filter_batch(batch, 5, static_cast<unsigned>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}
BENCHMARK(BM_FilterBatch)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_HdiffReference(benchmark::State& state) {
  const auto in = io::generate_hdiff_inputs({64, 64, 16}, 2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(stencil::hdiff_reference(in.in, in.coeff));
  state.SetItemsProcessed(state.iterations() * 60 * 60 * 16);
}
BENCHMARK(BM_HdiffReference)->Unit(benchmark::kMicrosecond);

// arg = tile edge.
void BM_HdiffOptimized(benchmark::State& state) {
  const auto in = io::generate_hdiff_inputs({64, 64, 16}, 2, 42);
  const auto tile = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stencil::hdiff_optimized(in.in, in.coeff, 1, {tile, tile}));
  }
  state.SetItemsProcessed(state.iterations() * 60 * 60 * 16);
}
BENCHMARK(BM_HdiffOptimized)->Arg(8)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Vadvc(benchmark::State& state) {
  const auto fields = io::generate_vadvc_fields({32, 32, 64}, 2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(stencil::vadvc_optimized(fields, 1));
  state.SetItemsProcessed(state.iterations() * 28 * 28);
}
BENCHMARK(BM_Vadvc)->Unit(benchmark::kMicrosecond);

void BM_Simulate(benchmark::State& state) {
  const auto cal = accel::load_calibration(accel::default_calibration_path());
  const auto& k = cal.kernel(accel::KernelKind::Hdiff);
  const auto& pc = cal.platform("HBM+OCAPI");
  for (auto _ : state) benchmark::DoNotOptimize(accel::simulate(k, pc, 8, 1));
}
BENCHMARK(BM_Simulate);

}  // namespace

BENCHMARK_MAIN();
