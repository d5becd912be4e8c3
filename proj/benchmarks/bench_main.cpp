#include <benchmark/benchmark.h>

#include <random>

#include "circdeblur/circdeblur.hpp"

using namespace circdeblur;

namespace {

Image random_image(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(rows * cols);
  for (auto& x : v) x = dist(rng);
  return Image(rows, cols, std::move(v));
}

void BM_Dft1d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Image row = random_image(1, n);
  const Signal x(std::vector<double>(row.values().begin(), row.values().end()));
  for (auto _ : state) benchmark::DoNotOptimize(dft_1d(x));
  state.SetComplexityN(state.range(0));
}
// Powers of two take the radix-2 path, the others go through Bluestein.
BENCHMARK(BM_Dft1d)->Arg(64)->Arg(100)->Arg(1024)->Arg(1000)->Arg(4096)->Arg(4099);

void BM_Dft2d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Image f = random_image(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(dft_2d(f));
}
BENCHMARK(BM_Dft2d)->Arg(64)->Arg(256)->Arg(300)->Arg(512);

void BM_CenteredSpatial(benchmark::State& state) {
  const Image f = random_image(256, 256);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Kernel2D h = uniform_psf(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(centered_conv_2d(f, h));
}
BENCHMARK(BM_CenteredSpatial)->Arg(3)->Arg(7)->Arg(15)->Arg(31);

void BM_CenteredSpectral(benchmark::State& state) {
  const Image f = random_image(256, 256);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Kernel2D h = uniform_psf(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(freq_conv_2d_modified(f, h));
}
BENCHMARK(BM_CenteredSpectral)->Arg(3)->Arg(7)->Arg(15)->Arg(31);

void BM_ClsModified(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Image g = random_image(n, n);
  const Kernel2D h = gaussian_psf(1.0, 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(cls_modified(g, h, laplacian_mask(), {}));
}
BENCHMARK(BM_ClsModified)->Arg(64)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
