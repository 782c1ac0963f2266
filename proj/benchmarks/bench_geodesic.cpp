#include <benchmark/benchmark.h>

#include "geosal/cut.hpp"
#include "geosal/geodesic.hpp"
#include "geosal/saliency.hpp"
#include "geosal/synth.hpp"

namespace {

geosal::RgbImage scene(int w, int h) {
  geosal::SynthOptions opts;
  opts.width = w;
  opts.height = h;
  opts.background = geosal::Background::Noise;
  return geosal::synth_scene(1, 0, opts).image;
}

void BM_ClassicTransform(benchmark::State& state) {
  const auto img = scene(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) * 3 / 4);
  const auto seeds = geosal::border_seeds(img.width(), img.height());
  for (auto _ : state) benchmark::DoNotOptimize(geosal::classic_geodesic_transform(img, seeds));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_ClassicTransform)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_TunnelingTransform(benchmark::State& state) {
  const auto img = scene(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) * 3 / 4);
  const auto seeds = geosal::border_seeds(img.width(), img.height());
  geosal::TunnelParams p;
  p.exact_tunnels = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(geosal::tunneling_geodesic_transform(img, seeds, p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_TunnelingTransform)
    ->Args({100, 0})
    ->Args({200, 0})
    ->Args({400, 0})
    ->Args({200, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SaliencyAndCut(benchmark::State& state) {
  const auto img = scene(400, 300);
  for (auto _ : state) benchmark::DoNotOptimize(geosal::hierarchical_cut(geosal::geodesic_saliency(img)));
}
BENCHMARK(BM_SaliencyAndCut)->Unit(benchmark::kMillisecond);

void BM_HierarchicalCut(benchmark::State& state) {
  const auto map = geosal::geodesic_saliency(scene(400, 300));
  for (auto _ : state) benchmark::DoNotOptimize(geosal::hierarchical_cut(map));
}
BENCHMARK(BM_HierarchicalCut)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
