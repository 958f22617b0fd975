#include "nilgeo/nilgeo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nilgeo;

void BM_GeodesicPointHelix(benchmark::State& state) {
  const Direction dir{0.7, 0.4};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_point(dir, t));
    t = t < 5.0 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_GeodesicPointHelix);

void BM_GeodesicPointSeries(benchmark::State& state) {
  const Direction dir{0.7, 1e-6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_point(dir, 2.0));
  }
}
BENCHMARK(BM_GeodesicPointSeries);

void BM_IntegrateGeodesic(benchmark::State& state) {
  const Eigen::Vector3d v0 = unit_tangent_at_origin({0.7, 0.4}).v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_geodesic(Point::origin(), v0, 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_IntegrateGeodesic)->Arg(1000)->Arg(10000);

void BM_Shoot(benchmark::State& state) {
  const Point target = geodesic_point({0.9, 0.2}, 1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shoot(target));
  }
}
BENCHMARK(BM_Shoot)->Unit(benchmark::kMillisecond);

void BM_TriangleReport(benchmark::State& state) {
  const Triangle tri{{0, 0, 0}, {0.5, -1, 1}, {1.0 / 3, 2, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangle_report(tri));
  }
}
BENCHMARK(BM_TriangleReport)->Unit(benchmark::kMillisecond);

void BM_TablePreset(benchmark::State& state) {
  const TablePreset& preset = table_presets()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_scan(preset.spec, preset.grid));
  }
}
BENCHMARK(BM_TablePreset)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
