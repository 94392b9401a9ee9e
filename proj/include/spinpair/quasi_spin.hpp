#ifndef SPINPAIR_QUASI_SPIN_HPP
#define SPINPAIR_QUASI_SPIN_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace spinpair {

// Two-ensemble state sum_m a_m |N/2, m>_l |N/2, -m>_r. With N/2 atoms per
// trap and occupations (k, N/2 - k), the population difference m = 2k - N/2
// steps by 2 and shares the parity of N/2; coeffs is indexed over exactly
// those values, coeffs[i] <-> m = 2i - N/2, i = 0..N/2.
struct EprState {
  long n_total = 0;  // N, even; N/2 atoms in each trap
  Eigen::VectorXcd coeffs;

  long branches() const { return n_total / 2 + 1; }
  long m_at(long i) const { return 2 * i - n_total / 2; }
};

// Each of the N/2 pairs routes its spin-(+1) member into the left or right
// trap with equal amplitude, giving |a_m|^2 = C(N/2, k)/2^(N/2), m = 2k - N/2.
EprState binomial_epr_state(long n_total);

// Quasi-spin statistics of L_z = factor * (N_+ - N_-), per trap and total.
// factor = 1 is the plain population difference; factor = 1/2 the spin-1/2
// convention.
struct SpinStats {
  double mean_l = 0.0;
  double mean_r = 0.0;
  double mean_total = 0.0;
  double var_l = 0.0;
  double var_r = 0.0;
  double var_total = 0.0;
  double convention_factor = 1.0;
};

// Every branch |N/2, m>_l |N/2, -m>_r is a zero eigenstate of the total L_z,
// so mean_total and var_total vanish identically, whatever the coefficients.
// Throws NotNormalized when sum |a_m|^2 deviates from 1 beyond 1e-9.
SpinStats lz_stats(const EprState& state, double convention_factor = 1.0);

// Variance of L_z for N independent atoms in (|+1> + |-1>)/sqrt(2):
// factor^2 * N (each atom contributes factor^2).
double product_state_variance(long n_total, double convention_factor);

// var_total / product_state_variance: zero for every valid pair-correlated
// state, 1 for an uncorrelated two-trap product state with binomial marginals.
double squeezing_ratio(const EprState& state, double convention_factor);

// Plain-text coefficient format: one "m real imag" triple per line, blank
// lines and # comments ignored. Unlisted branches are zero. Validates parity,
// range, duplicates, and normalization.
EprState load_epr_state(std::istream& in, long n_total);
EprState load_epr_state_file(const std::string& path, long n_total);

}  // namespace spinpair

#endif
