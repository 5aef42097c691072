#include "kcon/denoise.hpp"

#include <algorithm>
#include <cmath>

namespace kcon {

namespace {

void check_config(const DenoiseConfig& cfg) {
  if (!(cfg.lambda_kc >= 0.0) || !std::isfinite(cfg.lambda_kc))
    throw InvalidArgumentError("lambda_kc must be finite and >= 0");
  if (!(cfg.step_size > 0.0) || !std::isfinite(cfg.step_size))
    throw InvalidArgumentError("step_size must be finite and > 0");
  if (cfg.max_iters < 1) throw InvalidArgumentError("max_iters must be at least 1");
  if (!(cfg.fidelity_weight >= 0.0) || !std::isfinite(cfg.fidelity_weight))
    throw InvalidArgumentError("fidelity_weight must be finite and >= 0");
  if (cfg.log_every < 1) throw InvalidArgumentError("log_every must be at least 1");
}

double variance(const Image& img) {
  const double n = static_cast<double>(img.pixels.size());
  double mean = 0.0;
  for (double v : img.pixels) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : img.pixels) var += (v - mean) * (v - mean);
  return var / n;
}

}  // namespace

double psnr(const Image& candidate, const Image& reference, double peak) {
  if (candidate.height != reference.height || candidate.width != reference.width)
    throw DimensionMismatchError("psnr images differ in shape");
  if (!(peak > 0.0)) throw InvalidArgumentError("psnr peak must be positive");
  const double mse = mean_squared_error(candidate, reference);
  if (mse == 0.0) return 99.0;  // equal images: capped sentinel
  return 10.0 * std::log10(peak * peak / mse);
}

double dynamic_peak(const Image& reference) {
  const auto [lo, hi] = std::minmax_element(reference.pixels.begin(), reference.pixels.end());
  return std::max(*hi - *lo, 1e-12);
}

DenoiseTrace denoise(const Image& noisy, const DenoiseConfig& cfg, const Image* ground_truth) {
  validate_image(noisy);
  check_config(cfg);
  if (ground_truth != nullptr) {
    validate_image(*ground_truth);
    if (ground_truth->height != noisy.height || ground_truth->width != noisy.width)
      throw DimensionMismatchError("ground truth shape differs from the noisy input");
  }

  const double n = static_cast<double>(noisy.pixels.size());
  const double gt_peak = ground_truth != nullptr ? dynamic_peak(*ground_truth) : 0.0;
  DenoiseTrace trace;
  Image x = noisy;

  LossGrad lg;
  double fidelity = 0.0, objective = 0.0;
  // Divergence shows up in the fidelity term first (it grows with ||x||^2),
  // so gate on it before handing a blown-up iterate to the kurtosis code.
  auto evaluate = [&](int iter) {
    fidelity = mean_squared_error(x, noisy);
    if (!std::isfinite(fidelity)) throw DivergenceError(iter, std::move(trace));
    lg = kc_loss(x, cfg.bank);  // loss value doubles as the kurtosis deviation
    objective = cfg.fidelity_weight * fidelity + cfg.lambda_kc * lg.loss;
  };
  auto log_point = [&](int iter) {
    TracePoint pt;
    pt.iteration = iter;
    pt.objective = objective;
    pt.kc_loss = lg.loss;
    pt.fidelity = fidelity;
    pt.deviation = lg.loss;
    if (ground_truth != nullptr) {
      pt.has_reference = true;
      const double noise_var = mean_squared_error(x, *ground_truth);
      pt.snr = noise_var > 0.0 ? variance(x) / noise_var : 99.0;
      pt.psnr_db = psnr(x, *ground_truth, gt_peak);
    }
    trace.points.push_back(pt);
  };

  evaluate(0);
  if (!std::isfinite(objective)) throw DivergenceError(0, std::move(trace));
  trace.initial_deviation = lg.loss;
  log_point(0);

  const double fid_scale = cfg.fidelity_weight * 2.0 / n;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    for (std::size_t i = 0; i < x.pixels.size(); ++i) {
      const double g = fid_scale * (x.pixels[i] - noisy.pixels[i]) +
                       cfg.lambda_kc * lg.gradient.pixels[i];
      x.pixels[i] -= cfg.step_size * g;
    }
    bool finite_x = true;
    for (double v : x.pixels)
      if (!std::isfinite(v)) {
        finite_x = false;
        break;
      }
    if (!finite_x) throw DivergenceError(iter, std::move(trace));
    evaluate(iter);
    if (!std::isfinite(objective)) throw DivergenceError(iter, std::move(trace));
    if (iter % cfg.log_every == 0 || iter == cfg.max_iters) log_point(iter);
  }

  trace.final_deviation = lg.loss;
  trace.final_image = std::move(x);
  return trace;
}

}  // namespace kcon
