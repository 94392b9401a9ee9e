#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinpair/errors.hpp"
#include "spinpair/gain.hpp"

using namespace spinpair;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

Vec3 q_at(double q_mag, double theta, double phi = 0.0) {
  return {q_mag * std::sin(theta) * std::cos(phi), q_mag * std::sin(theta) * std::sin(phi),
          q_mag * std::cos(theta)};
}

AngularGrid unchecked(int nodes) {
  AngularGrid g;
  g.n_theta = nodes;
  g.n_phi = nodes;
  g.check_convergence = false;
  return g;
}

double half_width(const CondensateGeometry& geom, double q_mag, const AngularGrid& grid) {
  const ModelParams params = fig2_params(q_mag);
  const double g0 = gain_at(geom, params, q_at(q_mag, 0.0), grid);
  double lo = 0.0, hi = 1.2;
  for (int it = 0; it < 48; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gain_at(geom, params, q_at(q_mag, mid), grid) / g0 > 0.5 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("shell momentum solves the energy condition") {
  const ModelParams params(2.0, 1.0);
  const double q_sym = std::sqrt(2.0 * params.detuning);
  CHECK(shell_momentum(q_sym, params) == doctest::Approx(q_sym).epsilon(1e-14));
  CHECK(shell_momentum(0.0, params) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
  CHECK_THROWS_AS(shell_momentum(3.0, params), ClosedChannel);  // 9 > 8
}

TEST_CASE("isotropic condensate gains equally in all directions") {
  const CondensateGeometry iso(1.0, 1.0, 100);
  const ModelParams params = fig2_params(3.0);
  const double along_z = gain_at(iso, params, q_at(3.0, 0.0));
  const double diagonal = gain_at(iso, params, q_at(3.0, M_PI / 4.0));
  CHECK(rel_diff(along_z, diagonal) < 1e-10);
}

TEST_CASE("gain decays away from the long axis of a cigar") {
  const CondensateGeometry geom(10.0, 1.0, 100);
  const ModelParams params = fig2_params(10.0);
  const double g0 = gain_at(geom, params, q_at(10.0, 0.0));
  const double g45 = gain_at(geom, params, q_at(10.0, M_PI / 4.0));
  const double g90 = gain_at(geom, params, q_at(10.0, M_PI / 2.0));
  CHECK(g0 > g45);
  CHECK(g45 > g90);
  CHECK(g90 > 0.0);
}

TEST_CASE("azimuthal and reflection symmetry") {
  const CondensateGeometry geom(8.0, 1.0, 100);
  const ModelParams params = fig2_params(6.0);
  const double reference = gain_at(geom, params, q_at(6.0, 0.4, 0.0));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 8; ++trial) {
    const double rotated = gain_at(geom, params, q_at(6.0, 0.4, unif(rng)));
    CHECK(rel_diff(reference, rotated) < 1e-10);
  }
  const double mirrored = gain_at(geom, params, q_at(6.0, M_PI - 0.4));
  CHECK(rel_diff(reference, mirrored) < 1e-10);
}

TEST_CASE("default grid is converged to 1e-6 under step halving") {
  const CondensateGeometry geom(20.0, 1.0, 100);
  const ModelParams params = fig2_params(40.0);
  for (double theta : {0.0, 0.05, 0.3, 1.2}) {
    const double coarse = gain_at(geom, params, q_at(40.0, theta), unchecked(128));
    const double fine = gain_at(geom, params, q_at(40.0, theta), unchecked(256));
    CHECK(rel_diff(coarse, fine) < 1e-6);
  }
}

// Frozen from the 4x-resolution (1024-node) quadrature, cross-checked against
// an independent Bessel-function reduction of the azimuthal integral.
TEST_CASE("frozen regression: axial gain and half-widths of the reference curves") {
  struct Curve {
    double sigma_z, q, g_axial, theta_half;
  };
  const Curve curves[] = {
      {10.0, 10.0, 6.876845481262749e-01, 0.371830164097363},
      {10.0, 20.0, 4.770478639606064e-01, 0.251634841215760},
      {10.0, 40.0, 2.846586060500651e-01, 0.200382728011253},
      {20.0, 40.0, 2.382001069285942e-01, 0.124560114240991},
  };
  for (const Curve& c : curves) {
    const CondensateGeometry geom(c.sigma_z, 1.0, 100);
    const ModelParams params = fig2_params(c.q);
    const double g0 = gain_at(geom, params, q_at(c.q, 0.0));
    CHECK(rel_diff(g0, c.g_axial) < 1e-9);
    const double th = half_width(geom, c.q, unchecked(256));
    CHECK(std::abs(th - c.theta_half) < 1e-9);
  }
  // the reference ordering: wider curves for smaller q and smaller aspect ratio
  CHECK(curves[0].theta_half > curves[1].theta_half);
  CHECK(curves[1].theta_half > curves[2].theta_half);
  CHECK(curves[2].theta_half > curves[3].theta_half);
}

TEST_CASE("theta scan: ordering, normalization, isotropic flatness") {
  const CondensateGeometry geom(10.0, 1.0, 100);
  const ModelParams params = fig2_params(10.0);
  std::vector<double> thetas;
  for (int i = 0; i <= 30; ++i) thetas.push_back(M_PI / 2.0 * i / 30.0);

  const GainScan scan = gain_scan_theta(geom, params, 10.0, thetas);
  REQUIRE(scan.points.size() == thetas.size());
  CHECK(scan.points.front().g_normalized == 1.0);  // peak at theta = 0
  double max_norm = 0.0;
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    if (i > 0) {
      CHECK(scan.points[i].theta > scan.points[i - 1].theta);
      CHECK(scan.points[i].g_normalized <= scan.points[i - 1].g_normalized + 1e-12);
    }
    max_norm = std::max(max_norm, scan.points[i].g_normalized);
    CHECK(scan.points[i].g_raw >= 0.0);
  }
  CHECK(max_norm == 1.0);
  CHECK(scan.quadrature_meta.max_rel_change < 1e-6);

  const CondensateGeometry iso(2.0, 2.0, 100);
  const GainScan flat = gain_scan_theta(iso, fig2_params(4.0), 4.0, thetas);
  for (const GainPoint& p : flat.points) CHECK(std::abs(p.g_normalized - 1.0) < 1e-9);
}

TEST_CASE("scan rejects bad inputs and all-zero scans") {
  const CondensateGeometry geom(10.0, 1.0, 100);
  const ModelParams params = fig2_params(10.0);
  CHECK_THROWS_AS(gain_scan_theta(geom, params, 10.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(gain_scan_theta(geom, params, 10.0, {-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(gain_scan_theta(geom, params, 10.0, {4.0}), std::invalid_argument);

  // exp arguments ~ -1e6 at every angle: every point underflows to zero
  const CondensateGeometry huge(2000.0, 2000.0, 100);
  CHECK_THROWS_AS(gain_scan_theta(huge, fig2_params(1000.0), 1000.0, {0.0, 0.5}), AllZeroScan);
}

TEST_CASE("a grid too coarse for the peak is reported as non-convergent") {
  const CondensateGeometry geom(20.0, 1.0, 100);
  AngularGrid grid;
  grid.n_theta = 4;
  grid.n_phi = 8;
  grid.refine_levels = 0;
  CHECK_THROWS_AS(gain_at(geom, fig2_params(40.0), q_at(40.0, 0.3), grid), NonConvergent);
}

TEST_CASE("rate_for_mode maps normalized gain to physical rate") {
  const ModelParams params(50.0, 2.0);
  CHECK(rate_for_mode(1.0, params) == 2.0);
  CHECK(rate_for_mode(0.0, params) == 0.0);
  CHECK(rate_for_mode(0.5, params) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rate_for_mode(1.5, params), std::invalid_argument);
  CHECK_THROWS_AS(rate_for_mode(-0.1, params), std::invalid_argument);
}
