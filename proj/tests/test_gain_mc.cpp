#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mc_gain_oracle.hpp"
#include "spinpair/gain.hpp"

using namespace spinpair;
using spinpair_tests::McGainEstimate;
using spinpair_tests::mc_gain_oracle;

// Shell-reduction correctness: the analytic radial resolution of the energy
// delta function must agree with a regulated Monte Carlo evaluation of the
// full 3D integral on randomized parameter sets.
TEST_CASE("gain_at matches the regulated Monte Carlo delta oracle within 1%") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (int set = 0; set < 3; ++set) {
    const double sigma_z = 2.0 + 6.0 * unif(rng);
    const double q_mag = 5.0 + 10.0 * unif(rng);
    const double theta = 0.5 * M_PI * unif(rng);
    const double shell_ratio = 0.95 + 0.10 * unif(rng);  // q_s / q
    const double q_s = shell_ratio * q_mag;
    const double detuning = 0.25 * (q_mag * q_mag + q_s * q_s);

    const CondensateGeometry geom(sigma_z, 1.0, 100);
    const ModelParams params(detuning, 1.0);
    const Vec3 q(q_mag * std::sin(theta), 0.0, q_mag * std::cos(theta));

    const double quadrature = gain_at(geom, params, q);

    // Regulator width: a small fraction of the spread of Delta over the
    // sampled cloud, which scales like q_s * sqrt(2)/sigma_min.
    const double eps = 0.1 * q_s * std::sqrt(2.0) / std::min(sigma_z, 1.0);
    const McGainEstimate mc = mc_gain_oracle(geom, params, q, eps, 4'000'000, 1000 + set);

    INFO("set ", set, ": sigma_z=", sigma_z, " q=", q_mag, " theta=", theta, " qs/q=", shell_ratio);
    INFO("quadrature=", quadrature, " mc=", mc.value, " +- ", mc.stderr_);
    CHECK(mc.stderr_ < 0.01 * mc.value);  // the oracle itself must be sharp
    CHECK(std::abs(quadrature - mc.value) <= 0.01 * quadrature + 3.0 * mc.stderr_);
  }
}
