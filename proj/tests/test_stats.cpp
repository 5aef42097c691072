#include <cmath>
#include <vector>

#include <doctest.h>

#include "kcon/rng.hpp"
#include "kcon/stats.hpp"
#include "support/texture.hpp"

using namespace kcon;
using kcon::testing::random_gaussian_image;

TEST_CASE("moments of a small hand-computed set") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const MomentSummary m = moments(v);
  CHECK(m.count == 4);
  CHECK(m.mean == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(m.variance == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(m.fourth_central_moment == doctest::Approx(2.5625).epsilon(1e-15));
  CHECK(kurtosis(v) == doctest::Approx(2.5625 / 1.5625 - 3.0).epsilon(1e-14));
}

TEST_CASE("alternating two-point sample has kurtosis exactly -2") {
  const std::vector<double> v{1.0, -1.0, 1.0, -1.0};
  CHECK(kurtosis(v) == -2.0);
}

TEST_CASE("kurtosis matches the Gaussian and uniform references at scale") {
  Rng rng(8675309);
  std::vector<double> g(1000000), u(g.size());
  for (auto& x : g) x = rng.normal();
  for (auto& x : u) x = rng.uniform();
  CHECK(std::fabs(kurtosis(g)) < 0.02);
  CHECK(kurtosis(u) == doctest::Approx(-1.2).epsilon(0.02));
}

TEST_CASE("kurtosis is invariant to affine rescaling") {
  Rng rng(99);
  std::vector<double> v(4096), w(v.size());
  for (auto& x : v) x = rng.normal() + 0.3 * rng.uniform();
  const double base = kurtosis(v);
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -3.25 * v[i] + 17.0;
  CHECK(kurtosis(w) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("kurtosis rejects tiny and degenerate samples") {
  CHECK_THROWS_AS(kurtosis(std::vector<double>{1.0, 2.0, 3.0}), InvalidArgumentError);
  CHECK_THROWS_AS(kurtosis(std::vector<double>(64, 5.5)), DegenerateVarianceError);
  CHECK_THROWS_AS(kurtosis(std::vector<double>(64, 0.0)), DegenerateVarianceError);
  std::vector<double> nearly(64, 1.0);
  nearly[0] = 1.0 + 1e-9;  // variance ~1e-20, mean-square ~1: below the relative floor
  CHECK_THROWS_AS(kurtosis(nearly), DegenerateVarianceError);
  CHECK_THROWS_AS(kurtosis(std::vector<double>{1.0, 2.0, HUGE_VAL, 3.0}), NonFiniteError);
}

TEST_CASE("analytic kurtosis gradient matches central differences") {
  for (int trial = 0; trial < 5; ++trial) {
    const Image img = random_gaussian_image(300 + trial, 8, 8);
    std::vector<double> v = img.pixels;
    const std::vector<double> grad = kurtosis_gradient(v);
    const double h = 1e-5;
    double max_grad = 0.0, max_diff = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double keep = v[j];
      v[j] = keep + h;
      const double up = kurtosis(v);
      v[j] = keep - h;
      const double down = kurtosis(v);
      v[j] = keep;
      max_grad = std::max(max_grad, std::fabs(grad[j]));
      max_diff = std::max(max_diff, std::fabs((up - down) / (2.0 * h) - grad[j]));
    }
    CHECK(max_diff < 1e-5 * max_grad);
  }
}

TEST_CASE("kurtosis gradient is orthogonal to shifts and rescalings") {
  const Image img = random_gaussian_image(77, 16, 16);
  const std::vector<double>& v = img.pixels;
  const std::vector<double> grad = kurtosis_gradient(v);
  double sum = 0.0, proj = 0.0, gnorm = 0.0, vnorm = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += grad[i];
    proj += grad[i] * v[i];
    gnorm += grad[i] * grad[i];
    vnorm += v[i] * v[i];
  }
  // <g, 1> = 0 (shift invariance) and <g, x> = 0 (scale invariance).
  CHECK(std::fabs(sum) < 1e-12 * std::sqrt(gnorm) * std::sqrt(static_cast<double>(v.size())));
  CHECK(std::fabs(proj) < 1e-12 * std::sqrt(gnorm) * std::sqrt(vnorm));
}

TEST_CASE("kurtosis gradient shares the kurtosis preconditions") {
  CHECK_THROWS_AS(kurtosis_gradient(std::vector<double>{1.0, 2.0, 3.0}), InvalidArgumentError);
  CHECK_THROWS_AS(kurtosis_gradient(std::vector<double>(16, 2.0)), DegenerateVarianceError);
}

TEST_CASE("snr is the plain variance ratio") {
  CHECK(snr(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(snr(0.5, 0.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(snr(1.0, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(snr(1.0, -0.5), InvalidArgumentError);
}

TEST_CASE("noise estimate recovers sigma on pure Gaussian fields") {
  for (double sigma : {0.02, 0.05, 0.1, 0.2}) {
    const Image img = random_gaussian_image(1234 + static_cast<int>(sigma * 1000), 256, 256, sigma);
    const NoiseEstimate est = estimate_noise_sigma(img);
    CHECK(est.sigma == doctest::Approx(sigma).epsilon(0.05));
    CHECK(est.kernel_used == "haar");
    CHECK(est.subband_used == "HH");
  }
}

TEST_CASE("noise estimate is robust to piecewise-constant structure") {
  Image img = make_image(256, 256);
  for (int r = 0; r < 256; ++r)
    for (int c = 0; c < 256; ++c) img.at(r, c) = ((r / 32 + c / 32) % 2) ? 1.0 : 0.0;
  const Image noisy = kcon::testing::add_gaussian_noise(img, 0.05, 321);
  const double est = estimate_noise_sigma(noisy).sigma;
  CHECK(est > 0.045);
  CHECK(est < 0.065);
}

TEST_CASE("noise estimate of a flat image is zero") {
  CHECK(estimate_noise_sigma(make_image(64, 64, 0.0)).sigma == 0.0);
  CHECK(estimate_noise_sigma(make_image(64, 64, 0.9)).sigma == 0.0);
}

TEST_CASE("noise estimate grows with the true sigma") {
  double prev = -1.0;
  for (double sigma : {0.02, 0.05, 0.1, 0.2}) {
    const Image img = random_gaussian_image(55, 256, 256, sigma);
    const double est = estimate_noise_sigma(img).sigma;
    CHECK(est > prev);
    prev = est;
  }
}

TEST_CASE("quantile interpolates linearly between order statistics") {
  const std::vector<double> v{4.0, 1.0, 3.0, 2.0};  // unsorted on purpose
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 0.25) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(quantile(v, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(quantile(v, 0.75) == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(quantile(v, 1.0) == 4.0);
  CHECK(median(std::vector<double>{3.0, 1.0, 2.0}) == 2.0);
  CHECK(median(std::vector<double>{1.0}) == 1.0);
  CHECK_THROWS_AS(quantile({}, 0.5), InvalidArgumentError);
  CHECK_THROWS_AS(quantile(v, 1.5), InvalidArgumentError);
}
