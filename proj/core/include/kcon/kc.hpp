#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kcon/stats.hpp"
#include "kcon/wavelet.hpp"

namespace kcon {

struct SubbandKurtosis {
  std::string kernel;
  std::string plane;
  double kurtosis = 0.0;
};

// Per-subband kurtosis values with their spread statistics. Quartiles use
// linear interpolation; degenerate-variance planes are listed in
// excluded_subbands ("kernel/plane") and take no part in the statistics.
struct KurtosisReport {
  std::vector<SubbandKurtosis> entries;
  std::vector<std::string> excluded_subbands;
  double max_kurtosis = 0.0;
  double min_kurtosis = 0.0;
  double deviation = 0.0;  // max - min
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

KurtosisReport kc_report(const Image& img, const FilterBank& bank);

// loss = max kurtosis - min kurtosis over included subbands; the gradient
// backpropagates only the argmax/argmin planes (subgradient of max/min),
// ties broken by lowest subband index.
struct LossGrad {
  double loss = 0.0;
  Image gradient;
  std::string argmax_subband;
  std::string argmin_subband;
};

LossGrad kc_loss(const Image& img, const FilterBank& bank);

struct BoxStats {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;   // lowest datum within q1 - 1.5 IQR
  double whisker_high = 0.0;  // highest datum within q3 + 1.5 IQR
};

BoxStats box_stats(const std::vector<double>& values);

struct DatasetSummary {
  std::vector<std::size_t> analyzed;  // input indices, in input order
  std::vector<double> deviations;     // parallel to analyzed
  std::vector<std::size_t> failed;    // input indices skipped
  std::vector<std::string> failure_messages;  // parallel to failed
  double mean_deviation = 0.0;
  double median_deviation = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  BoxStats box;  // box-plot record over the per-image deviations
};

// Per-image failures are recorded and skipped; throws only if every image
// fails (EmptyReportError) or the list is empty.
DatasetSummary dataset_kc_summary(const std::vector<Image>& images, const FilterBank& bank);

// Mean squared error between same-shaped images (the reconstruction-loss
// building block used by the denoiser's fidelity term).
double mean_squared_error(const Image& a, const Image& b);

}  // namespace kcon
