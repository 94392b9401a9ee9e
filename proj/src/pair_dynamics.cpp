#include "spinpair/pair_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "spinpair/errors.hpp"
#include "spinpair/form_factor.hpp"

namespace spinpair {

namespace {

void require_in_range(double rate, double t) {
  if (rate < 0.0) throw std::invalid_argument("rate must be >= 0");
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  if (rate * t > kMaxGainExponent) {
    throw Overflow("rate*t exceeds 700; exp(rate t) is not representable");
  }
}

// phi1(z) = (exp(z) - 1)/z, phi1(0) = 1
Complex phi1(Complex z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  }
  return (std::exp(z) - 1.0) / z;
}

}  // namespace

double population(double rate, double t) {
  require_in_range(rate, t);
  return std::expm1(rate * t);
}

ModePopulation mode_population(double rate, double t) {
  const double n = population(rate, t);
  return {t, rate, n, n};
}

NoiseCorrelators noise_correlators(double rate) {
  if (rate < 0.0) throw std::invalid_argument("rate must be >= 0");
  return {0.0, rate};
}

SqueezeCovariance evolve_covariance(double rate, double t) {
  require_in_range(rate, t);
  const double g = 0.5 * rate * t;
  return {Complex(std::cosh(g), 0.0), Complex(0.0, -std::sinh(g))};
}

Complex pair_correlation(const CondensateGeometry& geom, const ModelParams& params, const Vec3& q,
                         const Vec3& q_prime, double rate_q, double rate_q_prime, double t) {
  require_in_range(rate_q, t);
  require_in_range(rate_q_prime, t);

  const double delta = energy_mismatch(q, q_prime, params);
  const double rho = form_factor_closed(geom, Vec3(q + q_prime));
  const double amplitude = 0.5 * rate_q_prime;  // calibrated pump factor A

  // -i A rho G_q G_q' t phi1((i Delta - rate_q'/2) t) is the bracketed
  // difference quotient written in an overflow- and cancellation-safe form.
  const double growth = std::exp(0.5 * rate_q * t) * std::exp(0.5 * rate_q_prime * t);
  const Complex z = Complex(-0.5 * rate_q_prime, delta) * t;
  return Complex(0.0, -1.0) * amplitude * rho * growth * t * phi1(z);
}

}  // namespace spinpair
