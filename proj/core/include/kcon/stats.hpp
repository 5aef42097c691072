#pragma once

#include <span>
#include <string>
#include <vector>

#include "kcon/image.hpp"

namespace kcon {

// Population moments (divisor N throughout).
struct MomentSummary {
  long long count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double fourth_central_moment = 0.0;
};

MomentSummary moments(std::span<const double> values);

// Excess kurtosis mu4/var^2 - 3. Requires count >= 4 and non-degenerate
// variance (variance > 1e-12 * mean-square); throws DegenerateVarianceError
// instead of ever returning Inf/NaN.
double kurtosis(std::span<const double> values);

// Analytic gradient of kurtosis() with respect to each entry.
std::vector<double> kurtosis_gradient(std::span<const double> values);

// sigma^2(observed) / sigma^2(noise), dimensionless ratio.
double snr(double signal_plus_noise_variance, double noise_variance);

struct NoiseEstimate {
  double sigma = 0.0;
  std::string kernel_used;   // "haar"
  std::string subband_used;  // "HH"
};

// Wavelet-MAD estimate: median(|HH of single-level Haar DWT|) / 0.6745.
NoiseEstimate estimate_noise_sigma(const Image& img);

// Linear-interpolation quantile (the numpy default) on an unsorted copy;
// p in [0,1].
double quantile(std::vector<double> values, double p);

double median(std::vector<double> values);

}  // namespace kcon
