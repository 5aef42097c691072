#pragma once

#include <cstdint>
#include <vector>

#include "kcon/kc.hpp"

namespace kcon {

// Fixed-step gradient descent on
//   F(x) = fidelity_weight * mean((x - noisy)^2) + lambda_kc * L_KC(x)
// starting from the noisy observation.
struct DenoiseConfig {
  FilterBank bank = default_bank();
  double lambda_kc = 1.0;
  double step_size = 1e-2;
  int max_iters = 400;
  double fidelity_weight = 1.0;
  std::uint64_t seed = 0;  // recorded in reports; the descent itself is deterministic
  int log_every = 10;
};

struct TracePoint {
  int iteration = 0;  // 0 is the state before the first update
  double objective = 0.0;
  double kc_loss = 0.0;
  double fidelity = 0.0;
  double deviation = 0.0;
  bool has_reference = false;
  double snr = 0.0;      // var(x) / var(x - reference), ratio
  double psnr_db = 0.0;  // peak = dynamic range of the reference
};

struct DenoiseTrace {
  std::vector<TracePoint> points;  // non-empty, iteration strictly increasing
  Image final_image;
  double initial_deviation = 0.0;
  double final_deviation = 0.0;
};

// Non-finite objective mid-descent; carries the trace accumulated so far.
struct DivergenceError : Error {
  int iteration;
  DenoiseTrace partial;
  DivergenceError(int iter, DenoiseTrace trace)
      : Error("objective became non-finite at iteration " + std::to_string(iter)),
        iteration(iter),
        partial(std::move(trace)) {}
};

DenoiseTrace denoise(const Image& noisy, const DenoiseConfig& config,
                     const Image* ground_truth = nullptr);

// 10 log10(peak^2 / MSE); equal images return the 99.0 dB cap.
double psnr(const Image& candidate, const Image& reference, double peak);

// max - min of the reference, the peak used for trace PSNR (floored away
// from zero so a constant reference cannot poison the ratio).
double dynamic_peak(const Image& reference);

}  // namespace kcon
