#include <cmath>

#include <doctest.h>

#include "kcon/denoise.hpp"
#include "support/texture.hpp"

using namespace kcon;
using kcon::testing::TextureParams;
using kcon::testing::add_gaussian_noise;
using kcon::testing::gsm_texture;
using kcon::testing::random_gaussian_image;

namespace {

// Calibrated two-scale mixture trial: texture z in {0.5, 1.5}, noise sigma 0.1.
struct Trial {
  Image clean;
  Image noisy;
};

Trial mixture_trial(std::uint64_t texture_seed, std::uint64_t noise_seed) {
  TextureParams p;
  p.z_lo = 0.5;
  p.z_hi = 1.5;
  p.frac_high = 0.5;
  Trial t;
  t.clean = gsm_texture(texture_seed, p);
  t.noisy = add_gaussian_noise(t.clean, 0.1, noise_seed);
  return t;
}

}  // namespace

TEST_CASE("with the prior disabled the observation is already optimal") {
  const Image noisy = add_gaussian_noise(gsm_texture(3), 0.1, 4);
  DenoiseConfig cfg;
  cfg.lambda_kc = 0.0;
  cfg.max_iters = 50;
  const DenoiseTrace trace = denoise(noisy, cfg);
  REQUIRE(trace.final_image.pixels.size() == noisy.pixels.size());
  for (std::size_t i = 0; i < noisy.pixels.size(); ++i)
    CHECK(std::fabs(trace.final_image.pixels[i] - noisy.pixels[i]) <= 1e-9);
}

TEST_CASE("a clean image barely moves under the default objective") {
  const Image clean = gsm_texture(9001);
  const DenoiseTrace trace = denoise(clean, DenoiseConfig{});
  double drift = 0.0;
  for (std::size_t i = 0; i < clean.pixels.size(); ++i)
    drift += std::fabs(trace.final_image.pixels[i] - clean.pixels[i]);
  drift /= static_cast<double>(clean.pixels.size());
  CHECK(drift < 0.01);
}

TEST_CASE("seeded mixture trials improve PSNR and reduce the deviation") {
  const std::uint64_t seeds[2][2] = {{501, 100501}, {250, 100250}};
  for (const auto& pair : seeds) {
    const Trial t = mixture_trial(pair[0], pair[1]);
    const DenoiseTrace trace = denoise(t.noisy, DenoiseConfig{}, &t.clean);

    const double peak = dynamic_peak(t.clean);
    const double psnr_noisy = psnr(t.noisy, t.clean, peak);
    const double psnr_final = psnr(trace.final_image, t.clean, peak);
    CHECK(psnr_final > psnr_noisy);
    CHECK(trace.final_deviation <= trace.initial_deviation);
    CHECK(trace.points.front().psnr_db == doctest::Approx(psnr_noisy).epsilon(1e-12));
    CHECK(trace.points.back().psnr_db == doctest::Approx(psnr_final).epsilon(1e-12));
    CHECK(trace.points.back().snr >= trace.points.front().snr);
    for (const auto& pt : trace.points) CHECK(pt.has_reference);
  }
}

TEST_CASE("the objective decreases through the early iterations") {
  const Trial t = mixture_trial(501, 100501);
  DenoiseConfig cfg;
  cfg.log_every = 1;
  const DenoiseTrace trace = denoise(t.noisy, cfg, &t.clean);
  REQUIRE(trace.points.size() == 401);
  for (int i = 1; i <= 10; ++i) CHECK(trace.points[i].objective < trace.points[i - 1].objective);
  CHECK(trace.points.back().objective < trace.points.front().objective);
}

TEST_CASE("trace logging hits iteration 0, multiples, and the final step") {
  const Trial t = mixture_trial(501, 100501);
  DenoiseConfig cfg;
  cfg.max_iters = 25;
  cfg.log_every = 10;
  const DenoiseTrace trace = denoise(t.noisy, cfg);
  REQUIRE(trace.points.size() == 4);  // 0, 10, 20, 25
  CHECK(trace.points[0].iteration == 0);
  CHECK(trace.points[1].iteration == 10);
  CHECK(trace.points[2].iteration == 20);
  CHECK(trace.points[3].iteration == 25);
  for (std::size_t i = 1; i < trace.points.size(); ++i)
    CHECK(trace.points[i].iteration > trace.points[i - 1].iteration);
  CHECK_FALSE(trace.points[0].has_reference);
  CHECK(trace.points[0].fidelity == 0.0);  // descent starts at the observation
}

TEST_CASE("an absurd step size diverges with a usable partial trace") {
  const Image noisy = random_gaussian_image(42, 32, 32);
  DenoiseConfig cfg;
  cfg.step_size = 1e6;
  try {
    denoise(noisy, cfg);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.iteration > 0);
    CHECK(e.iteration <= cfg.max_iters);
    REQUIRE_FALSE(e.partial.points.empty());
    CHECK(e.partial.points.front().iteration == 0);
    for (std::size_t i = 1; i < e.partial.points.size(); ++i)
      CHECK(e.partial.points[i].iteration > e.partial.points[i - 1].iteration);
    CHECK(e.partial.points.back().iteration < e.iteration);
  }
}

TEST_CASE("config validation rejects nonsensical settings") {
  const Image noisy = random_gaussian_image(1, 16, 16);
  DenoiseConfig cfg;
  cfg.step_size = 0.0;
  CHECK_THROWS_AS(denoise(noisy, cfg), InvalidArgumentError);
  cfg = DenoiseConfig{};
  cfg.lambda_kc = -1.0;
  CHECK_THROWS_AS(denoise(noisy, cfg), InvalidArgumentError);
  cfg = DenoiseConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(denoise(noisy, cfg), InvalidArgumentError);
  cfg = DenoiseConfig{};
  cfg.log_every = 0;
  CHECK_THROWS_AS(denoise(noisy, cfg), InvalidArgumentError);
  cfg = DenoiseConfig{};
  cfg.fidelity_weight = -0.5;
  CHECK_THROWS_AS(denoise(noisy, cfg), InvalidArgumentError);

  const Image wrong = random_gaussian_image(2, 16, 18);
  CHECK_THROWS_AS(denoise(noisy, DenoiseConfig{}, &wrong), DimensionMismatchError);
}

TEST_CASE("a constant observation has no subband statistics to descend on") {
  const Image flat = make_image(32, 32, 0.5);
  CHECK_THROWS_AS(denoise(flat, DenoiseConfig{}), InsufficientSubbandsError);
}

TEST_CASE("psnr follows the closed form and caps at equality") {
  Image ref = make_image(2, 2, 0.0);
  Image cand = make_image(2, 2, 0.1);  // mse = 0.01
  CHECK(psnr(cand, ref, 1.0) == doctest::Approx(20.0).epsilon(1e-12));
  Image off = make_image(2, 2, 1.0);  // mse = 1
  CHECK(psnr(off, ref, 2.0) == doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-12));
  CHECK(psnr(ref, ref, 1.0) == 99.0);
  CHECK_THROWS_AS(psnr(cand, make_image(2, 3, 0.0), 1.0), DimensionMismatchError);
  CHECK_THROWS_AS(psnr(cand, ref, 0.0), InvalidArgumentError);
}

TEST_CASE("dynamic peak is the reference range with a positive floor") {
  Image ref = make_image(2, 2, 0.0);
  ref.pixels = {-2.0, 1.0, 0.0, 3.0};
  CHECK(dynamic_peak(ref) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(dynamic_peak(make_image(4, 4, 7.0)) == 1e-12);
}
