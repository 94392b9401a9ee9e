#ifndef SPINPAIR_QUADRATURE_HPP
#define SPINPAIR_QUADRATURE_HPP

#include <Eigen/Dense>
#include <cmath>

namespace spinpair {

struct GaussLegendreRule {
  Eigen::ArrayXd nodes;    // ascending in (-1, 1)
  Eigen::ArrayXd weights;  // sum to 2
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
inline GaussLegendreRule gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

// Same rule affinely mapped to [a, b].
inline GaussLegendreRule gauss_legendre(int n, double a, double b) {
  GaussLegendreRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double halfw = 0.5 * (b - a);
  rule.nodes = mid + halfw * rule.nodes;
  rule.weights *= halfw;
  return rule;
}

}  // namespace spinpair

#endif
