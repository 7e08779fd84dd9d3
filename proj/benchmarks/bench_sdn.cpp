#include <benchmark/benchmark.h>

#include "sdn/sdn.hpp"
#include "synthetic_shapes.hpp"

namespace {

using namespace sdn;

void BM_EstimateSigmas(benchmark::State& state) {
  const auto samples = image_to_samples(testing::disk_image(int(state.range(0)), int(state.range(0)),
                                                            0.5 * double(state.range(0) - 1),
                                                            0.5 * double(state.range(0) - 1), 0.3 * double(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_sigmas(samples, kDefaultT));
  state.SetItemsProcessed(state.iterations() * std::int64_t(samples.size()));
}
BENCHMARK(BM_EstimateSigmas)->Arg(32)->Arg(64)->Arg(128);

void BM_TrainDisk32(benchmark::State& state) {
  const auto img = testing::disk32();
  for (auto _ : state) benchmark::DoNotOptimize(train_image(img, TrainConfig{}));
}
BENCHMARK(BM_TrainDisk32)->Unit(benchmark::kMillisecond);

void BM_TrainDisk64(benchmark::State& state) {
  const auto img = testing::disk64();
  for (auto _ : state) benchmark::DoNotOptimize(train_image(img, TrainConfig{}));
}
BENCHMARK(BM_TrainDisk64)->Unit(benchmark::kMillisecond);

void BM_TrainTwoBlob(benchmark::State& state) {
  const auto img = testing::two_blob64();
  for (auto _ : state) benchmark::DoNotOptimize(train_image(img, TrainConfig{}));
}
BENCHMARK(BM_TrainTwoBlob)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const auto model = train_image(testing::disk64(), TrainConfig{}).model;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(model));
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMillisecond);

void BM_RenderOneClass(benchmark::State& state) {
  const auto model = train_image(testing::disk64(), TrainConfig{}).model;
  for (auto _ : state) benchmark::DoNotOptimize(render_one_class(model, 64, 64, kDefaultRadiusScale));
}
BENCHMARK(BM_RenderOneClass)->Unit(benchmark::kMillisecond);

void BM_ExtractSkeleton(benchmark::State& state) {
  const auto model = train_image(testing::ring40(), TrainConfig{}).model;
  for (auto _ : state) benchmark::DoNotOptimize(extract_skeleton(model, AutoThreshold{}));
}
BENCHMARK(BM_ExtractSkeleton);

void BM_GroupDomains(benchmark::State& state) {
  const auto model = train_image(testing::two_blob64(), TrainConfig{}).model;
  for (auto _ : state) benchmark::DoNotOptimize(group_domains(model, kDefaultRadiusScale));
}
BENCHMARK(BM_GroupDomains);

}  // namespace

BENCHMARK_MAIN();
