#include "spinpair/form_factor.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "spinpair/errors.hpp"
#include "spinpair/quadrature.hpp"

namespace spinpair {

namespace {

// One axis of the tensor rule: Int_{-L}^{L} exp(-2 x^2/sigma^2) exp(-i k x) dx
// by n-node Gauss-Legendre. The full 3D tensor sum factorizes into the
// product of these axis sums because both the density and the plane wave are
// separable; the factored evaluation is the same quadrature rule.
std::complex<double> axis_sum(double sigma, double k, double half_width, int n) {
  const GaussLegendreRule rule = gauss_legendre(n, -half_width, half_width);
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    const double density = std::exp(-2.0 * x * x / (sigma * sigma));
    acc += rule.weights[i] * density * std::complex<double>(std::cos(k * x), -std::sin(k * x));
  }
  return acc;
}

double evaluate(const CondensateGeometry& geom, const Vec3& k, double half_width_sigmas, int n) {
  const double lz = half_width_sigmas * geom.sigma_z;
  const double lp = half_width_sigmas * geom.sigma_perp;
  const std::complex<double> sx = axis_sum(geom.sigma_perp, k.x(), lp, n);
  const std::complex<double> sy = axis_sum(geom.sigma_perp, k.y(), lp, n);
  const std::complex<double> sz = axis_sum(geom.sigma_z, k.z(), lz, n);
  const double np = axis_sum(geom.sigma_perp, 0.0, lp, n).real();
  const double norm = np * np * axis_sum(geom.sigma_z, 0.0, lz, n).real();
  const std::complex<double> val = sx * sy * sz / norm;
  if (std::abs(val.imag()) >= 1e-10) {
    throw std::logic_error("form_factor_quad: imaginary part exceeds 1e-10 for a real even density");
  }
  return val.real();
}

}  // namespace

double form_factor_quad(const CondensateGeometry& geom, const Vec3& k, const FourierQuadSpec& spec) {
  if (spec.nodes_per_axis < 2) throw std::invalid_argument("nodes_per_axis must be >= 2");
  int n = spec.nodes_per_axis;
  double coarse = evaluate(geom, k, spec.half_width_sigmas, n);
  if (!spec.adaptive) return coarse;
  for (int pass = 0; pass <= spec.max_doublings; ++pass) {
    n *= 2;
    const double fine = evaluate(geom, k, spec.half_width_sigmas, n);
    if (std::abs(fine - coarse) <= spec.tol) return fine;
    coarse = fine;
  }
  throw NonConvergent("form_factor_quad: node doubling did not settle below tolerance");
}

}  // namespace spinpair
