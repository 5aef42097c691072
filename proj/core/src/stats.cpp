#include "kcon/stats.hpp"

#include <algorithm>
#include <cmath>

#include "kcon/wavelet.hpp"

namespace kcon {

namespace {

constexpr double kDegenerateRel = 1e-12;
constexpr double kMadToSigma = 0.6745;  // median of |N(0,1)|

// variance <= 1e-12 * mean-square catches constant planes (including the
// all-zero plane, where both sides are 0).
bool degenerate(double variance, double mean_square) {
  return variance <= kDegenerateRel * mean_square;
}

void check_kurtosis_pre(std::span<const double> values) {
  if (values.size() < 4)
    throw InvalidArgumentError("kurtosis needs at least 4 values, got " +
                               std::to_string(values.size()));
  for (double v : values)
    if (!std::isfinite(v)) throw NonFiniteError("kurtosis input contains a non-finite value");
}

}  // namespace

MomentSummary moments(std::span<const double> values) {
  MomentSummary m;
  m.count = static_cast<long long>(values.size());
  if (values.empty()) return m;
  const double n = static_cast<double>(values.size());
  for (double v : values) m.mean += v;
  m.mean /= n;
  for (double v : values) {
    const double d = v - m.mean;
    const double d2 = d * d;
    m.variance += d2;
    m.fourth_central_moment += d2 * d2;
  }
  m.variance /= n;
  m.fourth_central_moment /= n;
  return m;
}

double kurtosis(std::span<const double> values) {
  check_kurtosis_pre(values);
  const double n = static_cast<double>(values.size());
  double ms = 0.0;
  for (double v : values) ms += v * v;
  ms /= n;
  const MomentSummary m = moments(values);
  if (degenerate(m.variance, ms))
    throw DegenerateVarianceError("variance below degenerate threshold");
  return m.fourth_central_moment / (m.variance * m.variance) - 3.0;
}

std::vector<double> kurtosis_gradient(std::span<const double> values) {
  check_kurtosis_pre(values);
  const double n = static_cast<double>(values.size());
  double mean = 0.0, ms = 0.0;
  for (double v : values) {
    mean += v;
    ms += v * v;
  }
  mean /= n;
  ms /= n;
  double var = 0.0, mu3 = 0.0, mu4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    const double d2 = d * d;
    var += d2;
    mu3 += d2 * d;
    mu4 += d2 * d2;
  }
  var /= n;
  mu3 /= n;
  mu4 /= n;
  if (degenerate(var, ms))
    throw DegenerateVarianceError("variance below degenerate threshold");

  // kappa = mu4/var^2 - 3 with d_i = c_i - mean:
  //   dkappa/dc_j = 4/(n var^2) * (d_j^3 - mu3 - (mu4/var) d_j)
  const double scale = 4.0 / (n * var * var);
  const double ratio = mu4 / var;
  std::vector<double> grad(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double d = values[j] - mean;
    grad[j] = scale * (d * d * d - mu3 - ratio * d);
  }
  return grad;
}

double snr(double signal_plus_noise_variance, double noise_variance) {
  if (!(noise_variance > 0.0))
    throw InvalidArgumentError("noise variance must be positive");
  return signal_plus_noise_variance / noise_variance;
}

NoiseEstimate estimate_noise_sigma(const Image& img) {
  validate_image(img);
  const FilterKernel haar = builtin_kernel("haar");
  const auto planes = dwt2_forward(img, haar);
  std::vector<double> mags(planes[kHH].pixels.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::fabs(planes[kHH].pixels[i]);
  NoiseEstimate est;
  est.sigma = median(std::move(mags)) / kMadToSigma;
  est.kernel_used = "haar";
  est.subband_used = "HH";
  return est;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw InvalidArgumentError("quantile of empty data");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError("quantile p outside [0,1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

}  // namespace kcon
