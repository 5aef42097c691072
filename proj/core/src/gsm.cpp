#include "kcon/gsm.hpp"

#include <cmath>

#include "kcon/rng.hpp"
#include "kcon/stats.hpp"

namespace kcon {

namespace {

// Lower-triangular Cholesky factor of a symmetric matrix; throws on
// non-positive pivots (not positive-definite).
std::vector<double> cholesky(const std::vector<double>& a, int d) {
  std::vector<double> l(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double acc = a[static_cast<std::size_t>(i) * d + j];
      for (int k = 0; k < j; ++k)
        acc -= l[static_cast<std::size_t>(i) * d + k] * l[static_cast<std::size_t>(j) * d + k];
      if (i == j) {
        if (acc <= 0.0)
          throw InvalidArgumentError("covariance is not positive-definite (pivot " +
                                     std::to_string(i) + ")");
        l[static_cast<std::size_t>(i) * d + j] = std::sqrt(acc);
      } else {
        l[static_cast<std::size_t>(i) * d + j] = acc / l[static_cast<std::size_t>(j) * d + j];
      }
    }
  }
  return l;
}

double project(const double* row, const std::vector<double>& w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += row[i] * w[i];
  return acc;
}

bool whitened(const GsmSpec& spec) {
  if (spec.identity_covariance) return true;
  const int d = spec.dimension;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::fabs(spec.covariance[static_cast<std::size_t>(i) * d + j] - want) > 1e-10)
        return false;
    }
  return true;
}

}  // namespace

void validate_spec(const GsmSpec& spec) {
  if (spec.dimension < 1) throw InvalidArgumentError("gsm dimension must be positive");
  if (spec.mixing_values.empty() || spec.mixing_values.size() != spec.mixing_probs.size())
    throw InvalidArgumentError("mixing values/probs must be non-empty and equal length");
  double total = 0.0;
  for (std::size_t i = 0; i < spec.mixing_values.size(); ++i) {
    if (!(spec.mixing_values[i] > 0.0))
      throw InvalidArgumentError("mixing values must be positive");
    if (spec.mixing_probs[i] < 0.0)
      throw InvalidArgumentError("mixing probabilities must be non-negative");
    total += spec.mixing_probs[i];
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw InvalidArgumentError("mixing probabilities sum to " + std::to_string(total) +
                               ", expected 1");
  if (!(spec.noise_sigma2 >= 0.0) || !std::isfinite(spec.noise_sigma2))
    throw InvalidArgumentError("noise_sigma2 must be finite and non-negative");
  if (!spec.identity_covariance) {
    const int d = spec.dimension;
    if (spec.covariance.size() != static_cast<std::size_t>(d) * d)
      throw InvalidArgumentError("covariance must be dimension x dimension");
    double max_abs = 1.0;
    for (double v : spec.covariance) {
      if (!std::isfinite(v)) throw InvalidArgumentError("covariance has a non-finite entry");
      max_abs = std::max(max_abs, std::fabs(v));
    }
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const double diff = std::fabs(spec.covariance[static_cast<std::size_t>(i) * d + j] -
                                      spec.covariance[static_cast<std::size_t>(j) * d + i]);
        if (diff > 1e-10 * max_abs)
          throw InvalidArgumentError("covariance is not symmetric");
      }
  }
}

double mixing_mean(const GsmSpec& spec) {
  double m = 0.0;
  for (std::size_t i = 0; i < spec.mixing_values.size(); ++i)
    m += spec.mixing_probs[i] * spec.mixing_values[i];
  return m;
}

double mixing_variance(const GsmSpec& spec) {
  const double m = mixing_mean(spec);
  double v = 0.0;
  for (std::size_t i = 0; i < spec.mixing_values.size(); ++i) {
    const double d = spec.mixing_values[i] - m;
    v += spec.mixing_probs[i] * d * d;
  }
  return v;
}

double theoretical_projection_kurtosis(const GsmSpec& spec) {
  validate_spec(spec);
  const double m = mixing_mean(spec);
  return 3.0 * mixing_variance(spec) / (m * m);
}

std::vector<double> sample_gsm(const GsmSpec& spec, int n_samples, std::uint64_t seed) {
  validate_spec(spec);
  if (n_samples < 1) throw InvalidArgumentError("n_samples must be at least 1");
  const int d = spec.dimension;
  std::vector<double> chol;
  if (!spec.identity_covariance) chol = cholesky(spec.covariance, d);

  Rng rng(seed);
  std::vector<double> out(static_cast<std::size_t>(n_samples) * d);
  std::vector<double> g(d);
  for (int s = 0; s < n_samples; ++s) {
    const double z = spec.mixing_values[rng.discrete(spec.mixing_probs)];
    const double root_z = std::sqrt(z);
    for (int i = 0; i < d; ++i) g[i] = rng.normal();
    double* row = out.data() + static_cast<std::size_t>(s) * d;
    if (spec.identity_covariance) {
      for (int i = 0; i < d; ++i) row[i] = root_z * g[i];
    } else {
      for (int i = 0; i < d; ++i) {
        double acc = 0.0;
        for (int k = 0; k <= i; ++k) acc += chol[static_cast<std::size_t>(i) * d + k] * g[k];
        row[i] = root_z * acc;
      }
    }
  }
  return out;
}

Lemma1Record verify_lemma1(const GsmSpec& spec, int n_samples, int n_directions,
                           std::uint64_t seed, double tolerance) {
  validate_spec(spec);
  if (n_samples < 10000) throw InvalidArgumentError("lemma 1 needs at least 10^4 samples");
  if (n_directions < 2) throw InvalidArgumentError("lemma 1 needs at least 2 directions");
  if (!(tolerance > 0.0)) throw InvalidArgumentError("tolerance must be positive");

  Lemma1Record rec;
  rec.theory = theoretical_projection_kurtosis(spec);
  rec.tolerance = tolerance;
  rec.n_samples = n_samples;
  rec.n_directions = n_directions;
  rec.seed = seed;

  const int d = spec.dimension;
  const std::vector<double> samples = sample_gsm(spec, n_samples, seed);
  Rng dir_rng(seed + 1);  // separate stream so sample reuse stays valid
  std::vector<double> proj(n_samples);
  double kmin = 0.0, kmax = 0.0;
  for (int t = 0; t < n_directions; ++t) {
    const std::vector<double> w = dir_rng.unit_direction(d);
    for (int s = 0; s < n_samples; ++s)
      proj[s] = project(samples.data() + static_cast<std::size_t>(s) * d, w);
    const double k = kurtosis(proj);
    rec.direction_kurtosis.push_back(k);
    rec.max_abs_error = std::max(rec.max_abs_error, std::fabs(k - rec.theory));
    if (t == 0) {
      kmin = kmax = k;
    } else {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
  }
  rec.spread = kmax - kmin;
  rec.pass = rec.max_abs_error <= tolerance;
  return rec;
}

Lemma2Record verify_lemma2(const GsmSpec& spec, int n_samples, int n_directions,
                           std::uint64_t seed, double tolerance) {
  validate_spec(spec);
  if (!whitened(spec))
    throw UnsupportedConfigError("lemma 2 verification requires a whitened spec (identity covariance)");
  if (std::fabs(mixing_mean(spec) - 1.0) > 1e-9)
    throw UnsupportedConfigError("lemma 2 verification requires E[z] = 1 (unit signal variance)");
  if (!(spec.noise_sigma2 > 0.0))
    throw InvalidArgumentError("lemma 2 needs noise_sigma2 > 0");
  if (n_samples < 10000) throw InvalidArgumentError("lemma 2 needs at least 10^4 samples");
  if (n_directions < 1) throw InvalidArgumentError("lemma 2 needs at least 1 direction");
  if (!(tolerance > 0.0)) throw InvalidArgumentError("tolerance must be positive");

  Lemma2Record rec;
  rec.clean_theory = theoretical_projection_kurtosis(spec);
  const double s2 = spec.noise_sigma2;
  rec.snr = snr(1.0 + s2, s2);
  const double shrink = 1.0 - 1.0 / rec.snr;
  rec.predicted_kurtosis = rec.clean_theory * shrink * shrink;
  rec.tolerance = tolerance;
  rec.n_samples = n_samples;
  rec.n_directions = n_directions;
  rec.seed = seed;

  const int d = spec.dimension;
  std::vector<double> y = sample_gsm(spec, n_samples, seed);
  Rng noise_rng(seed + 2);
  const double sigma = std::sqrt(s2);
  for (double& v : y) v += sigma * noise_rng.normal();

  Rng dir_rng(seed + 1);
  std::vector<double> proj(n_samples);
  double sum_k = 0.0;
  for (int t = 0; t < n_directions; ++t) {
    const std::vector<double> w = dir_rng.unit_direction(d);
    for (int s = 0; s < n_samples; ++s)
      proj[s] = project(y.data() + static_cast<std::size_t>(s) * d, w);
    const double k = kurtosis(proj);
    rec.direction_kurtosis.push_back(k);
    sum_k += k;
  }
  rec.empirical_kurtosis = sum_k / n_directions;
  rec.abs_error = std::fabs(rec.empirical_kurtosis - rec.predicted_kurtosis);
  rec.relative_error = rec.predicted_kurtosis != 0.0
                           ? rec.abs_error / std::fabs(rec.predicted_kurtosis)
                           : rec.abs_error;
  rec.pass = rec.relative_error <= tolerance;
  return rec;
}

}  // namespace kcon
