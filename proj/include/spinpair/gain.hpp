#ifndef SPINPAIR_GAIN_HPP
#define SPINPAIR_GAIN_HPP

#include <vector>

#include "spinpair/model.hpp"

namespace spinpair {

// Angular quadrature for the energy-shell integral: Gauss-Legendre in
// cos(theta') crossed with a uniform (trapezoid) azimuthal rule. The polar
// axis is the back-to-back direction -q_hat, where the phase-matched peak of
// |rho_bar|^2 sits; refine_levels nested panels are placed around it, scaled
// to the analytically known peak width.
struct AngularGrid {
  int n_theta = 256;  // Gauss-Legendre nodes in cos(theta') per panel
  int n_phi = 256;    // uniform azimuthal nodes
  int refine_levels = 3;
  bool check_convergence = true;  // re-evaluate at doubled node counts
  double tol = 1e-6;              // relative change allowed under doubling
};

struct GainPoint {
  double theta = 0.0;         // angle between q and the condensate long axis
  double q_mag = 0.0;
  double g_raw = 0.0;         // shell integral q_s * Int dOmega' |rho_bar|^2
  double g_normalized = 0.0;  // g_raw / max over the scan
};

struct QuadratureMeta {
  int n_theta = 0;
  int n_phi = 0;
  int refine_levels = 0;
  double max_rel_change = 0.0;  // worst node-doubling change over the scan
};

struct GainScan {
  CondensateGeometry geom;
  double q_mag = 0.0;
  double detuning = 0.0;
  std::vector<GainPoint> points;  // sorted by theta
  QuadratureMeta quadrature_meta;
};

// Magnitude of the energy-conserving partner momentum:
// omega(q) + omega(q_s) = 2 delta  =>  q_s = sqrt(4 delta - q^2).
// Throws ClosedChannel when q^2 > 4 delta.
double shell_momentum(double q_mag, const ModelParams& params);

// Reduced gain integral
//   g_hat(q) = q_s * Int dOmega' |rho_bar(q + q_s n')|^2 ,
// the energy delta function having been resolved analytically on the radial
// integral (Int d3q' F delta(Delta) = q_s Int dOmega' F(q_s n')). The overall
// coupling prefactor is dropped; dynamics uses rate_for_mode instead.
double gain_at(const CondensateGeometry& geom, const ModelParams& params, const Vec3& q,
               const AngularGrid& grid = {});

struct GainValue {
  double value = 0.0;
  double rel_change = 0.0;  // achieved node-doubling change (0 if unchecked)
};

GainValue gain_at_detail(const CondensateGeometry& geom, const ModelParams& params, const Vec3& q,
                         const AngularGrid& grid = {});

// Evaluates gain_at for q = q_mag (sin t, 0, cos t) over the given angles and
// normalizes by the scan maximum. Throws AllZeroScan when every point
// underflows. Detuning comes from params; fig2_params supplies the
// symmetric-shell convention delta = q^2/2.
GainScan gain_scan_theta(const CondensateGeometry& geom, const ModelParams& params, double q_mag,
                         const std::vector<double>& thetas, const AngularGrid& grid = {});

// Physical amplification rate for a mode with normalized gain scan_value:
// the reference direction (theta = 0 on the symmetric shell) carries
// rate_ref by definition.
double rate_for_mode(double scan_value, const ModelParams& params);

// Symmetric-shell parameters: detuning = q^2/2 so that q itself lies on the
// energy shell (q_s = q).
inline ModelParams fig2_params(double q_mag, double rate_ref = 1.0) {
  return ModelParams(0.5 * q_mag * q_mag, rate_ref);
}

}  // namespace spinpair

#endif
