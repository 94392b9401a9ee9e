#ifndef SPINPAIR_TESTS_MC_GAIN_ORACLE_HPP
#define SPINPAIR_TESTS_MC_GAIN_ORACLE_HPP

// Test-only oracle for the gain integral: Monte Carlo evaluation of
//   Int d3q' |rho_bar(q+q')|^2 delta_eps(Delta_{q,q'})
// with a Gaussian-regularized delta of width eps, Richardson-extrapolated
// eps -> 0 (the bias is even in eps). Independent of the shell reduction and
// angular quadrature used by gain_at: momenta are importance-sampled from
// the Gaussian |rho_bar|^2 itself, so the weight is a constant.

#include <cmath>
#include <random>

#include "spinpair/form_factor.hpp"
#include "spinpair/model.hpp"

namespace spinpair_tests {

struct McGainEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

inline McGainEstimate mc_gain_oracle(const spinpair::CondensateGeometry& geom,
                                     const spinpair::ModelParams& params, const spinpair::Vec3& q,
                                     double eps, long n_samples, unsigned seed) {
  using spinpair::Vec3;
  const double sp = geom.sigma_perp, sz = geom.sigma_z;
  const double weight = std::pow(4.0 * M_PI, 1.5) / (sp * sp * sz);  // Int |rho_bar|^2 d3k
  const double sdev_p = std::sqrt(2.0) / sp;
  const double sdev_z = std::sqrt(2.0) / sz;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double eps_half = 0.5 * eps;
  const double norm_full = 1.0 / (eps * std::sqrt(2.0 * M_PI));
  const double norm_half = 1.0 / (eps_half * std::sqrt(2.0 * M_PI));

  double sum = 0.0, sum2 = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const Vec3 k(sdev_p * gauss(rng), sdev_p * gauss(rng), sdev_z * gauss(rng));
    const Vec3 q_prime = k - q;
    const double delta = spinpair::energy_mismatch(q, q_prime, params);
    const double d_full = norm_full * std::exp(-0.5 * (delta / eps) * (delta / eps));
    const double d_half = norm_half * std::exp(-0.5 * (delta / eps_half) * (delta / eps_half));
    const double sample = weight * (4.0 * d_half - d_full) / 3.0;  // eps^2 Richardson
    sum += sample;
    sum2 += sample * sample;
  }

  McGainEstimate est;
  est.value = sum / n_samples;
  const double var = (sum2 / n_samples - est.value * est.value) / (n_samples - 1.0);
  est.stderr_ = std::sqrt(std::max(0.0, var));
  return est;
}

}  // namespace spinpair_tests

#endif
