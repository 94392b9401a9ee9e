#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Geometry>
#include <random>

#include "spinpair/model.hpp"

using namespace spinpair;

TEST_CASE("dispersion is |q|^2/2 in internal units") {
  CHECK(dispersion(Vec3(0, 0, 0)) == 0.0);
  CHECK(dispersion(Vec3(0, 0, 2)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(dispersion(Vec3(1, 1, 1)) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("dispersion is rotation invariant") {
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 q(5.0 * unif(rng), 5.0 * unif(rng), 5.0 * unif(rng));
    Eigen::Quaterniond rot(unif(rng), unif(rng), unif(rng), unif(rng));
    rot.normalize();
    const Vec3 rotated = rot * q;
    CHECK(dispersion(rotated) == doctest::Approx(dispersion(q)).epsilon(1e-12));
  }
}

TEST_CASE("energy mismatch on and off the shell") {
  const ModelParams params2(2.0, 1.0);
  const Vec3 on_shell(0, 0, std::sqrt(4.0));  // omega = 2 = detuning
  CHECK(energy_mismatch(on_shell, on_shell, params2) == doctest::Approx(0.0).epsilon(1e-14));

  const ModelParams params1(1.0, 1.0);
  CHECK(energy_mismatch(Vec3::Zero(), Vec3::Zero(), params1) == doctest::Approx(-2.0));

  const Vec3 fwd(0, 0, 2), back(0, 0, -2);
  CHECK(energy_mismatch(fwd, back, params2) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("energy mismatch is symmetric under q <-> q'") {
  const ModelParams params(3.0, 1.0);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 a(unif(rng), unif(rng), unif(rng));
    const Vec3 b(unif(rng), unif(rng), unif(rng));
    CHECK(energy_mismatch(a, b, params) == energy_mismatch(b, a, params));
  }
}

TEST_CASE("parameter records validate their invariants") {
  CHECK_THROWS_AS(CondensateGeometry(0.0, 1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(CondensateGeometry(10.0, -1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(CondensateGeometry(10.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, 0.0), std::invalid_argument);
  CHECK(CondensateGeometry(10.0, 2.0, 100).aspect_ratio() == doctest::Approx(5.0));
}
