#include "kcon/kc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace kcon {

namespace {

struct IncludedSubband {
  std::size_t set_index;  // into SubbandSet::subbands
  double kurtosis;
};

// Kurtosis per subband in deterministic order, honoring include_ll and
// skipping degenerate planes.
void collect(const SubbandSet& set, bool include_ll, std::vector<IncludedSubband>& included,
             std::vector<std::string>& excluded) {
  for (std::size_t i = 0; i < set.subbands.size(); ++i) {
    const Subband& sb = set.subbands[i];
    if (!include_ll && sb.plane == "LL") continue;
    try {
      included.push_back({i, kurtosis(sb.coeffs.pixels)});
    } catch (const DegenerateVarianceError&) {
      excluded.push_back(sb.kernel + "/" + sb.plane);
    }
  }
}

}  // namespace

KurtosisReport kc_report(const Image& img, const FilterBank& bank) {
  const SubbandSet set = decompose(img, bank);
  std::vector<IncludedSubband> included;
  KurtosisReport report;
  collect(set, bank.include_ll, included, report.excluded_subbands);
  if (included.empty())
    throw EmptyReportError("all subbands are degenerate; nothing to report");

  std::vector<double> kappas;
  kappas.reserve(included.size());
  for (const auto& inc : included) {
    const Subband& sb = set.subbands[inc.set_index];
    report.entries.push_back({sb.kernel, sb.plane, inc.kurtosis});
    kappas.push_back(inc.kurtosis);
  }
  report.max_kurtosis = *std::max_element(kappas.begin(), kappas.end());
  report.min_kurtosis = *std::min_element(kappas.begin(), kappas.end());
  report.deviation = report.max_kurtosis - report.min_kurtosis;
  report.q1 = quantile(kappas, 0.25);
  report.median = quantile(kappas, 0.5);
  report.q3 = quantile(kappas, 0.75);
  return report;
}

LossGrad kc_loss(const Image& img, const FilterBank& bank) {
  const SubbandSet set = decompose(img, bank);
  std::vector<IncludedSubband> included;
  std::vector<std::string> excluded;
  collect(set, bank.include_ll, included, excluded);
  if (included.size() < 2)
    throw InsufficientSubbandsError("kc loss needs at least 2 non-degenerate subbands, have " +
                                    std::to_string(included.size()));

  // Lowest-index tie-breaking: strict comparisons while scanning in order.
  std::size_t arg_max = 0, arg_min = 0;
  for (std::size_t i = 1; i < included.size(); ++i) {
    if (included[i].kurtosis > included[arg_max].kurtosis) arg_max = i;
    if (included[i].kurtosis < included[arg_min].kurtosis) arg_min = i;
  }

  LossGrad out;
  out.loss = included[arg_max].kurtosis - included[arg_min].kurtosis;
  const Subband& sb_max = set.subbands[included[arg_max].set_index];
  const Subband& sb_min = set.subbands[included[arg_min].set_index];
  out.argmax_subband = sb_max.kernel + "/" + sb_max.plane;
  out.argmin_subband = sb_min.kernel + "/" + sb_min.plane;

  // Backpropagate: +grad through the argmax plane, -grad through the argmin
  // plane, zero elsewhere. Planes of one kernel share a single adjoint call.
  std::map<std::string, std::array<Image, 4>> per_kernel;
  const int ph = (set.source_height + 1) / 2;
  const int pw = (set.source_width + 1) / 2;
  auto add_plane = [&](const Subband& sb, double sign) {
    auto [it, fresh] = per_kernel.try_emplace(sb.kernel);
    if (fresh) {
      for (auto& plane : it->second) {
        plane.height = ph;
        plane.width = pw;
        plane.pixels.assign(static_cast<std::size_t>(ph) * pw, 0.0);
      }
    }
    const std::vector<double> g = kurtosis_gradient(sb.coeffs.pixels);
    int plane_idx = 0;
    for (int p = 0; p < 4; ++p)
      if (sb.plane == kPlaneNames[p]) plane_idx = p;
    Image& target = it->second[plane_idx];
    for (std::size_t i = 0; i < g.size(); ++i) target.pixels[i] += sign * g[i];
  };
  add_plane(sb_max, 1.0);
  add_plane(sb_min, -1.0);

  out.gradient = make_image(set.source_height, set.source_width, 0.0);
  for (const auto& [kernel_name, planes] : per_kernel) {
    FilterKernel kernel;
    for (const auto& k : bank.kernels)
      if (k.name == kernel_name) kernel = k;
    const Image contrib = dwt2_adjoint(planes, kernel, set.source_height, set.source_width);
    for (std::size_t i = 0; i < out.gradient.pixels.size(); ++i)
      out.gradient.pixels[i] += contrib.pixels[i];
  }
  return out;
}

BoxStats box_stats(const std::vector<double>& values) {
  if (values.empty()) throw InvalidArgumentError("box_stats of empty data");
  BoxStats box;
  box.q1 = quantile(values, 0.25);
  box.median = quantile(values, 0.5);
  box.q3 = quantile(values, 0.75);
  const double iqr = box.q3 - box.q1;
  const double lo_fence = box.q1 - 1.5 * iqr;
  const double hi_fence = box.q3 + 1.5 * iqr;
  box.whisker_low = box.q1;
  box.whisker_high = box.q3;
  bool lo_set = false, hi_set = false;
  for (double v : values) {
    if (v >= lo_fence && (!lo_set || v < box.whisker_low)) {
      box.whisker_low = v;
      lo_set = true;
    }
    if (v <= hi_fence && (!hi_set || v > box.whisker_high)) {
      box.whisker_high = v;
      hi_set = true;
    }
  }
  return box;
}

DatasetSummary dataset_kc_summary(const std::vector<Image>& images, const FilterBank& bank) {
  if (images.empty()) throw InvalidArgumentError("dataset summary needs at least one image");
  DatasetSummary summary;
  for (std::size_t i = 0; i < images.size(); ++i) {
    try {
      const KurtosisReport report = kc_report(images[i], bank);
      summary.analyzed.push_back(i);
      summary.deviations.push_back(report.deviation);
    } catch (const Error& e) {
      summary.failed.push_back(i);
      summary.failure_messages.push_back(e.what());
    }
  }
  if (summary.deviations.empty())
    throw EmptyReportError("every image in the dataset failed analysis");

  double sum = 0.0;
  for (double d : summary.deviations) sum += d;
  summary.mean_deviation = sum / static_cast<double>(summary.deviations.size());
  summary.median_deviation = quantile(summary.deviations, 0.5);
  summary.q1 = quantile(summary.deviations, 0.25);
  summary.q3 = quantile(summary.deviations, 0.75);
  summary.box = box_stats(summary.deviations);
  return summary;
}

double mean_squared_error(const Image& a, const Image& b) {
  if (a.height != b.height || a.width != b.width)
    throw DimensionMismatchError("images are " + std::to_string(a.height) + "x" +
                                 std::to_string(a.width) + " vs " + std::to_string(b.height) + "x" +
                                 std::to_string(b.width));
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = a.pixels[i] - b.pixels[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.pixels.size());
}

}  // namespace kcon
