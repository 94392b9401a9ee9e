#ifndef SPINPAIR_MODEL_HPP
#define SPINPAIR_MODEL_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace spinpair {

// Unit conventions used throughout:
//   length      -> sigma_perp
//   wavenumber  -> 1/sigma_perp
//   frequency   -> hbar/(m sigma_perp^2)
// so the free-particle dispersion is omega(q) = |q|^2 / 2.
using Vec3 = Eigen::Vector3d;

// Cylindrically symmetric Gaussian condensate: widths sigma_z along the long
// axis and sigma_perp transverse, n0 atoms in the spin-0 mode at t = 0.
struct CondensateGeometry {
  double sigma_z = 10.0;
  double sigma_perp = 1.0;
  long n0 = 100;

  CondensateGeometry() = default;
  CondensateGeometry(double sz, double sp, long n) : sigma_z(sz), sigma_perp(sp), n0(n) {
    if (!(sigma_z > 0.0)) throw std::invalid_argument("sigma_z must be > 0");
    if (!(sigma_perp > 0.0)) throw std::invalid_argument("sigma_perp must be > 0");
    if (n0 < 2) throw std::invalid_argument("n0 must be >= 2");
  }

  double aspect_ratio() const { return sigma_z / sigma_perp; }
};

// detuning: level shift of the spin-0 state, in units hbar/(m sigma_perp^2).
// rate_ref: reference amplification rate Gamma_ref = N0^2 G at the reference
// direction (theta = 0 on the symmetric shell). The microscopic coupling and
// quantization volume never enter individually; only this composite rate does.
struct ModelParams {
  double detuning = 50.0;
  double rate_ref = 1.0;

  ModelParams() = default;
  ModelParams(double delta, double rate) : detuning(delta), rate_ref(rate) {
    if (!(detuning > 0.0)) throw std::invalid_argument("detuning must be > 0");
    if (!(rate_ref > 0.0)) throw std::invalid_argument("rate_ref must be > 0");
  }
};

// omega(q) = |q|^2 / 2
template <typename Scalar>
Scalar dispersion(const Eigen::Matrix<Scalar, 3, 1>& q) {
  return q.squaredNorm() / Scalar(2);
}

inline double dispersion(const Vec3& q) { return dispersion<double>(q); }

// Delta_{q,q'} = omega(q) + omega(q') - 2 delta
inline double energy_mismatch(const Vec3& q, const Vec3& q_prime, const ModelParams& params) {
  return dispersion(q) + dispersion(q_prime) - 2.0 * params.detuning;
}

}  // namespace spinpair

#endif
