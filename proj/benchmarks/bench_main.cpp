#include <benchmark/benchmark.h>

#include "kcon/denoise.hpp"
#include "kcon/kc.hpp"
#include "kcon/rng.hpp"
#include "kcon/stats.hpp"
#include "kcon/wavelet.hpp"

using namespace kcon;

namespace {

Image noise_image(int n, std::uint64_t seed = 1) {
  Rng rng(seed);
  Image img = make_image(n, n);
  for (double& v : img.pixels) v = rng.normal();
  return img;
}

void BM_Dwt2Forward(benchmark::State& state, const char* kernel_name) {
  const Image img = noise_image(256);
  const FilterKernel kernel = builtin_kernel(kernel_name);
  for (auto _ : state) benchmark::DoNotOptimize(dwt2_forward(img, kernel));
  state.SetBytesProcessed(state.iterations() * static_cast<long>(img.pixels.size()) * 8);
}

void BM_Dwt2Adjoint(benchmark::State& state) {
  const Image img = noise_image(256);
  const FilterKernel kernel = builtin_kernel("db4");
  const auto planes = dwt2_forward(img, kernel);
  for (auto _ : state)
    benchmark::DoNotOptimize(dwt2_adjoint(planes, kernel, img.height, img.width));
}

void BM_KurtosisGradient(benchmark::State& state) {
  const Image img = noise_image(256);
  for (auto _ : state) benchmark::DoNotOptimize(kurtosis_gradient(img.pixels));
}

void BM_KcReport(benchmark::State& state) {
  const Image img = noise_image(128);
  const FilterBank bank = default_bank();
  for (auto _ : state) benchmark::DoNotOptimize(kc_report(img, bank));
}

void BM_KcLossGrad(benchmark::State& state) {
  const Image img = noise_image(128);
  const FilterBank bank = default_bank();
  for (auto _ : state) benchmark::DoNotOptimize(kc_loss(img, bank));
}

void BM_DenoiseIteration(benchmark::State& state) {
  const Image noisy = noise_image(128, 7);
  DenoiseConfig cfg;
  cfg.max_iters = 1;
  cfg.log_every = 1;
  for (auto _ : state) benchmark::DoNotOptimize(denoise(noisy, cfg, nullptr));
}

BENCHMARK_CAPTURE(BM_Dwt2Forward, haar, "haar");
BENCHMARK_CAPTURE(BM_Dwt2Forward, db4, "db4");
BENCHMARK(BM_Dwt2Adjoint);
BENCHMARK(BM_KurtosisGradient);
BENCHMARK(BM_KcReport);
BENCHMARK(BM_KcLossGrad);
BENCHMARK(BM_DenoiseIteration);

}  // namespace

BENCHMARK_MAIN();
