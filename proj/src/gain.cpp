#include "spinpair/gain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinpair/errors.hpp"
#include "spinpair/quadrature.hpp"

namespace spinpair {

double shell_momentum(double q_mag, const ModelParams& params) {
  if (q_mag < 0.0) throw std::invalid_argument("q_mag must be >= 0");
  const double qs2 = 4.0 * params.detuning - q_mag * q_mag;
  if (qs2 < 0.0) throw ClosedChannel("no energy-conserving partner");
  return std::sqrt(qs2);
}

namespace {

// Panel edges in polar angle alpha measured from the peak axis -q_hat.
// The phase-matched peak has angular extent ~ 2/(sqrt(q q_s) sigma_min) in
// its broadest direction; nested panels halve down from 6 of those widths so
// Gauss-Legendre resolves the narrow (sigma_max) direction as well.
std::vector<double> panel_edges(double q_mag, double qs, const CondensateGeometry& geom,
                                int refine_levels) {
  std::vector<double> edges{0.0};
  const double qq = q_mag * qs;
  if (qq > 0.0) {
    const double sigma_min = std::min(geom.sigma_z, geom.sigma_perp);
    const double alpha_broad = 2.0 / (std::sqrt(qq) * sigma_min);
    const double base = 6.0 * alpha_broad;
    for (int level = refine_levels; level >= 0; --level) {
      const double a = base * std::ldexp(1.0, -level);
      if (a < M_PI) edges.push_back(a);
    }
  } else {
    // No geometric peak (q or q_s vanishes): split [0, pi] evenly.
    for (int i = 1; i <= refine_levels + 1; ++i) {
      edges.push_back(M_PI * i / (refine_levels + 2.0));
    }
  }
  edges.push_back(M_PI);
  return edges;
}

// q_s * Int dOmega' exp(-[k_z^2 sz^2 + k_perp^2 sp^2]/4), k = q + q_s n'.
double shell_integral(const CondensateGeometry& geom, const Vec3& q, double qs,
                      const std::vector<double>& edges, int n_theta, int n_phi) {
  const double q_mag = q.norm();
  const Vec3 axis = q_mag > 0.0 ? Vec3(-q / q_mag) : Vec3::UnitZ();
  const Vec3 e1 = axis.unitOrthogonal();
  const Vec3 e2 = axis.cross(e1);

  Eigen::ArrayXd cphi(n_phi), sphi(n_phi);
  for (int j = 0; j < n_phi; ++j) {
    const double phi = 2.0 * M_PI * j / n_phi;
    cphi[j] = std::cos(phi);
    sphi[j] = std::sin(phi);
  }

  const double sz2 = geom.sigma_z * geom.sigma_z;
  const double sp2 = geom.sigma_perp * geom.sigma_perp;

  Eigen::ArrayXd kx(n_phi), ky(n_phi), kz(n_phi), arg(n_phi);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    // u = cos(alpha), descending alpha -> ascending u
    const GaussLegendreRule rule =
        gauss_legendre(n_theta, std::cos(edges[p + 1]), std::cos(edges[p]));
    for (int i = 0; i < n_theta; ++i) {
      const double u = rule.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      // k(phi) = q + q_s (u axis + s cos(phi) e1 + s sin(phi) e2)
      const Vec3 c = q + qs * u * axis;
      kx = c.x() + qs * s * (e1.x() * cphi + e2.x() * sphi);
      ky = c.y() + qs * s * (e1.y() * cphi + e2.y() * sphi);
      kz = c.z() + qs * s * (e1.z() * cphi + e2.z() * sphi);
      arg = -0.25 * (sz2 * kz.square() + sp2 * (kx.square() + ky.square()));
      total += rule.weights[i] * arg.exp().sum();
    }
  }
  return qs * total * (2.0 * M_PI / n_phi);
}

}  // namespace

GainValue gain_at_detail(const CondensateGeometry& geom, const ModelParams& params, const Vec3& q,
                         const AngularGrid& grid) {
  if (grid.n_theta < 2 || grid.n_phi < 1) throw std::invalid_argument("angular grid too small");
  const double q_mag = q.norm();
  const double qs = shell_momentum(q_mag, params);
  const std::vector<double> edges = panel_edges(q_mag, qs, geom, grid.refine_levels);

  GainValue result;
  const double coarse = shell_integral(geom, q, qs, edges, grid.n_theta, grid.n_phi);
  if (!grid.check_convergence) {
    result.value = coarse;
    return result;
  }
  const double fine = shell_integral(geom, q, qs, edges, 2 * grid.n_theta, 2 * grid.n_phi);
  const double scale = std::max(std::abs(fine), std::numeric_limits<double>::min());
  result.rel_change = (fine == coarse) ? 0.0 : std::abs(fine - coarse) / scale;
  if (result.rel_change > grid.tol) {
    throw NonConvergent("gain quadrature did not settle under node doubling");
  }
  result.value = fine;
  return result;
}

double gain_at(const CondensateGeometry& geom, const ModelParams& params, const Vec3& q,
               const AngularGrid& grid) {
  return gain_at_detail(geom, params, q, grid).value;
}

GainScan gain_scan_theta(const CondensateGeometry& geom, const ModelParams& params, double q_mag,
                         const std::vector<double>& thetas, const AngularGrid& grid) {
  if (thetas.empty()) throw std::invalid_argument("thetas must be nonempty");
  for (double t : thetas) {
    if (!(t >= 0.0 && t <= M_PI)) throw std::invalid_argument("thetas must lie in [0, pi]");
  }

  GainScan scan;
  scan.geom = geom;
  scan.q_mag = q_mag;
  scan.detuning = params.detuning;
  scan.quadrature_meta = {grid.n_theta, grid.n_phi, grid.refine_levels, 0.0};

  std::vector<double> sorted = thetas;
  std::sort(sorted.begin(), sorted.end());
  scan.points.reserve(sorted.size());
  for (double theta : sorted) {
    const Vec3 q(q_mag * std::sin(theta), 0.0, q_mag * std::cos(theta));
    const GainValue g = gain_at_detail(geom, params, q, grid);
    scan.quadrature_meta.max_rel_change = std::max(scan.quadrature_meta.max_rel_change, g.rel_change);
    scan.points.push_back({theta, q_mag, g.value, 0.0});
  }

  double gmax = 0.0;
  for (const GainPoint& p : scan.points) gmax = std::max(gmax, p.g_raw);
  if (gmax <= 0.0) throw AllZeroScan("every gain point underflowed to zero");
  for (GainPoint& p : scan.points) p.g_normalized = p.g_raw / gmax;
  return scan;
}

double rate_for_mode(double scan_value, const ModelParams& params) {
  if (!(scan_value >= 0.0 && scan_value <= 1.0)) {
    throw std::invalid_argument("scan_value must lie in [0, 1]");
  }
  return params.rate_ref * scan_value;
}

}  // namespace spinpair
