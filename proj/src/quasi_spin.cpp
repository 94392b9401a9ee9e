#include "spinpair/quasi_spin.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spinpair/errors.hpp"

namespace spinpair {

namespace {

void require_even(long n_total) {
  if (n_total < 2) throw std::invalid_argument("n_total must be >= 2");
  if (n_total % 2 != 0) throw OddAtomNumber("n_total must be even: atoms are created in pairs");
}

// C(n, k) for all k, exactly in uint64 while it fits (n <= 60), otherwise via
// lgamma. The exact path keeps the binomial state bit-reproducible against
// brute-force enumeration at small N.
std::vector<double> binomial_row(long n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  if (n <= 60) {
    std::uint64_t c = 1;
    for (long k = 0; k <= n; ++k) {
      row[k] = static_cast<double>(c);
      if (k < n) c = c * static_cast<std::uint64_t>(n - k) / static_cast<std::uint64_t>(k + 1);
    }
  } else {
    for (long k = 0; k <= n; ++k) {
      row[k] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    }
  }
  return row;
}

}  // namespace

EprState binomial_epr_state(long n_total) {
  require_even(n_total);
  const long pairs = n_total / 2;
  EprState state;
  state.n_total = n_total;
  state.coeffs.resize(pairs + 1);
  const std::vector<double> choose = binomial_row(pairs);
  const double scale = std::ldexp(1.0, static_cast<int>(-pairs));  // 2^-pairs
  for (long k = 0; k <= pairs; ++k) {
    state.coeffs[k] = std::sqrt(choose[k] * scale);
  }
  return state;
}

SpinStats lz_stats(const EprState& state, double convention_factor) {
  require_even(state.n_total);
  if (state.coeffs.size() != state.branches()) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  const double norm2 = state.coeffs.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw NotNormalized("sum |a_m|^2 deviates from 1 beyond 1e-9");
  }

  const double f = convention_factor;
  double mean_m = 0.0, mean_m2 = 0.0;
  double mean_tot = 0.0, mean_tot2 = 0.0;
  for (long i = 0; i < state.branches(); ++i) {
    const double p = std::norm(state.coeffs[i]);
    const double m = static_cast<double>(state.m_at(i));
    mean_m += p * m;
    mean_m2 += p * m * m;
    // total L_z eigenvalue on this branch: f*(m + (-m)) = 0
    const double lz_total = 0.0;
    mean_tot += p * lz_total;
    mean_tot2 += p * lz_total * lz_total;
  }

  SpinStats stats;
  stats.convention_factor = f;
  stats.mean_l = f * mean_m;
  stats.mean_r = -f * mean_m;
  stats.var_l = f * f * (mean_m2 - mean_m * mean_m);
  stats.var_r = stats.var_l;
  stats.mean_total = mean_tot;
  stats.var_total = mean_tot2 - mean_tot * mean_tot;
  return stats;
}

double product_state_variance(long n_total, double convention_factor) {
  if (n_total < 1) throw std::invalid_argument("n_total must be >= 1");
  return convention_factor * convention_factor * static_cast<double>(n_total);
}

double squeezing_ratio(const EprState& state, double convention_factor) {
  const SpinStats stats = lz_stats(state, convention_factor);
  return stats.var_total / product_state_variance(state.n_total, convention_factor);
}

EprState load_epr_state(std::istream& in, long n_total) {
  require_even(n_total);
  EprState state;
  state.n_total = n_total;
  state.coeffs = Eigen::VectorXcd::Zero(state.branches());
  std::vector<bool> seen(static_cast<std::size_t>(state.branches()), false);

  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long m = 0;
    double re = 0.0, im = 0.0;
    if (!(fields >> m)) continue;  // blank or comment-only line
    if (!(fields >> re >> im)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'm real imag'");
    }
    const long half = n_total / 2;
    if (m < -half || m > half || ((m - half) % 2) != 0) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": m = " + std::to_string(m) +
                                  " is outside the allowed parity/range for N = " +
                                  std::to_string(n_total));
    }
    const long idx = (m + half) / 2;
    if (seen[idx]) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate m = " +
                                  std::to_string(m));
    }
    seen[idx] = true;
    state.coeffs[idx] = std::complex<double>(re, im);
  }

  if (std::abs(state.coeffs.squaredNorm() - 1.0) > 1e-9) {
    throw NotNormalized("coefficient file is not normalized");
  }
  return state;
}

EprState load_epr_state_file(const std::string& path, long n_total) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + path);
  return load_epr_state(in, n_total);
}

}  // namespace spinpair
