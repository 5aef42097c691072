#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcon/errors.hpp"

namespace kcon {

// Gaussian scale mixture x = sqrt(z) * L g with z discrete, g standard normal,
// L L^T the base covariance. identity_covariance short-circuits the matrix.
struct GsmSpec {
  int dimension = 0;
  std::vector<double> mixing_values;  // z_j > 0
  std::vector<double> mixing_probs;   // sums to 1 within 1e-12
  bool identity_covariance = true;
  std::vector<double> covariance;     // row-major d x d when !identity_covariance
  double noise_sigma2 = 0.0;          // additive white Gaussian noise variance
};

// Probabilities sum to 1 (1e-12), z > 0, covariance symmetric (1e-10) with
// matching size. Positive-definiteness is established by the Cholesky at
// sampling time.
void validate_spec(const GsmSpec& spec);

double mixing_mean(const GsmSpec& spec);
double mixing_variance(const GsmSpec& spec);

// Projection kurtosis of the clean GSM: 3 var(z) / E[z]^2, exact.
double theoretical_projection_kurtosis(const GsmSpec& spec);

// n_samples x dimension, row-major; bit-deterministic for a fixed seed.
std::vector<double> sample_gsm(const GsmSpec& spec, int n_samples, std::uint64_t seed);

// Constant-projection-kurtosis check: one sample set, many directions.
// Failure against the tolerance is a recorded result, not an error.
struct Lemma1Record {
  double theory = 0.0;
  std::vector<double> direction_kurtosis;
  double max_abs_error = 0.0;
  double spread = 0.0;  // max - min across directions
  double tolerance = 0.0;
  bool pass = false;
  int n_samples = 0;
  int n_directions = 0;
  std::uint64_t seed = 0;
};

Lemma1Record verify_lemma1(const GsmSpec& spec, int n_samples, int n_directions,
                           std::uint64_t seed, double tolerance);

// Kurtosis-vs-SNR check for the whitened case (covariance = identity,
// E[z] = 1, noise_sigma2 > 0): predicted kurtosis of y = x + n is
// theory * (1 - 1/SNR)^2 with SNR = (1 + sigma^2)/sigma^2. The empirical
// value is the mean projection kurtosis over the seeded directions.
// relative_error falls back to absolute error when the prediction is zero.
struct Lemma2Record {
  double snr = 0.0;
  double clean_theory = 0.0;
  double predicted_kurtosis = 0.0;
  std::vector<double> direction_kurtosis;
  double empirical_kurtosis = 0.0;
  double abs_error = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int n_samples = 0;
  int n_directions = 0;
  std::uint64_t seed = 0;
};

Lemma2Record verify_lemma2(const GsmSpec& spec, int n_samples, int n_directions,
                           std::uint64_t seed, double tolerance);

}  // namespace kcon
