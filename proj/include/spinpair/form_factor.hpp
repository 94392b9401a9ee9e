#ifndef SPINPAIR_FORM_FACTOR_HPP
#define SPINPAIR_FORM_FACTOR_HPP

#include "spinpair/model.hpp"

namespace spinpair {

// Normalized condensate form factor rho_bar(k): the Fourier transform of the
// squared density |phi|^4 of the Gaussian condensate, divided by its k = 0
// value, evaluated at the combined pair momentum k = q + q'.
//
// For phi ~ exp[-z^2/(2 sz^2) - (x^2+y^2)/(2 sp^2)] the transform of |phi|^4
// is Gaussian again:
//   rho_bar(k) = exp[-(kz^2 sz^2 + (kx^2+ky^2) sp^2) / 8]
template <typename Scalar>
Scalar form_factor_closed(const CondensateGeometry& geom, const Eigen::Matrix<Scalar, 3, 1>& k) {
  const Scalar sz2 = Scalar(geom.sigma_z) * Scalar(geom.sigma_z);
  const Scalar sp2 = Scalar(geom.sigma_perp) * Scalar(geom.sigma_perp);
  const Scalar arg = k.z() * k.z() * sz2 + (k.x() * k.x() + k.y() * k.y()) * sp2;
  return std::exp(-arg / Scalar(8));
}

inline double form_factor_closed(const CondensateGeometry& geom, const Vec3& k) {
  return form_factor_closed<double>(geom, k);
}

struct FormFactorResult {
  double value = 0.0;  // rho_bar(k), in [0, 1]
  Vec3 k = Vec3::Zero();
};

// Tensor-product Gauss-Legendre rule for the direct Fourier integral of the
// normalized |phi|^4 against exp(-i k.r). Integration half-width per axis is
// half_width_sigmas condensate widths; |phi|^4 decays as exp(-2 r^2/sigma^2),
// so 5 sigma bounds the truncation error below 1e-10.
struct FourierQuadSpec {
  int nodes_per_axis = 64;
  double half_width_sigmas = 5.0;
  double tol = 1e-10;       // node-doubling convergence target
  int max_doublings = 6;    // refine up to nodes_per_axis * 2^max_doublings
  bool adaptive = true;     // false: evaluate at nodes_per_axis only, no check
};

// Direct quadrature of Eq.-(rho)-type integral; the oracle path for the
// closed form. Throws NonConvergent if node doubling never settles below tol.
// Asserts that the imaginary part of the transform is < 1e-10, as it must be
// for the symmetric real density.
double form_factor_quad(const CondensateGeometry& geom, const Vec3& k,
                        const FourierQuadSpec& spec = {});

// How sharply the form factor selects back-to-back pairs: the ratio
// rho_bar(q + q')/rho_bar(0) at q' = -q (1 - eps). Tends to 0 as |q| sigma
// grows, i.e. when the condensate is much larger than 1/|q|.
inline double delta_function_limit_check(const CondensateGeometry& geom, const Vec3& q,
                                         double eps = 0.1) {
  return form_factor_closed(geom, Vec3(eps * q));
}

}  // namespace spinpair

#endif
