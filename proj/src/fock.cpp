#include "spinpair/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinpair/errors.hpp"

namespace spinpair {

Eigen::MatrixXd PairBasisHamiltonian::dense() const {
  const long d = dim();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  h.diagonal() = diag;
  for (long n = 0; n + 1 < d; ++n) {
    h(n + 1, n) = sub[n];
    h(n, n + 1) = sub[n];
  }
  return h;
}

PairBasisHamiltonian build_hamiltonian(long n0, double chi, double detuning_offset) {
  if (n0 < 2) throw std::invalid_argument("n0 must be >= 2");
  if (n0 % 2 != 0) throw OddAtomNumber("n0 must be even: the pair basis does not close");

  PairBasisHamiltonian h;
  h.n0 = n0;
  h.chi = chi;
  h.detuning_offset = detuning_offset;
  const long d = h.dim();
  h.diag.resize(d);
  h.sub.resize(d - 1);
  for (long n = 0; n < d; ++n) h.diag[n] = detuning_offset * static_cast<double>(n);
  for (long n = 0; n + 1 < d; ++n) {
    const double pump = static_cast<double>(n0 - 2 * n);
    h.sub[n] = chi * static_cast<double>(n + 1) * std::sqrt(pump * (pump - 1.0));
  }
  return h;
}

FockEvolution evolve(const PairBasisHamiltonian& h, const std::vector<double>& times,
                     std::optional<PairBasisState> initial) {
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("times must be sorted");
  }
  if (!times.empty() && times.front() < 0.0) {
    throw std::invalid_argument("times must be nonnegative");
  }
  const long d = h.dim();
  long start = 0;
  if (initial) {
    if (initial->n0_atoms + 2 * initial->n_pairs != h.n0 || initial->n_pairs < 0 ||
        initial->n_pairs >= d) {
      throw std::invalid_argument("initial state does not belong to the pair basis");
    }
    start = initial->n_pairs;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(h.diag, h.sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NonUnitary("eigendecomposition failed");
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const Eigen::MatrixXd& modes = solver.eigenvectors();

  FockEvolution evolution;
  evolution.n0 = h.n0;
  evolution.chi = h.chi;
  evolution.times = times;
  evolution.amplitudes.resize(d, static_cast<long>(times.size()));

  // psi(t) = V exp(-i E t) V^T e_start
  const Eigen::VectorXd overlap = modes.row(start).transpose();
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double t = times[j];
    Eigen::VectorXcd phased(d);
    for (long k = 0; k < d; ++k) {
      const double angle = -energies[k] * t;
      phased[k] = overlap[k] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    evolution.amplitudes.col(j) = modes * phased;
    const double norm = evolution.amplitudes.col(j).norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-8) {
      throw NonUnitary("state norm drifted beyond 1e-8 during propagation");
    }
  }
  return evolution;
}

std::vector<FockObservables> observables(const FockEvolution& evolution) {
  const long d = evolution.amplitudes.rows();
  std::vector<FockObservables> records;
  records.reserve(evolution.times.size());
  for (std::size_t j = 0; j < evolution.times.size(); ++j) {
    FockObservables rec;
    rec.t = evolution.times[j];
    double pump = 0.0, pairs = 0.0, pairs2 = 0.0, lz_mean = 0.0, lz2 = 0.0, norm2 = 0.0;
    for (long n = 0; n < d; ++n) {
      const double p = std::norm(evolution.amplitudes(n, j));
      const double npairs = static_cast<double>(n);
      const double lz = 0.0;  // every basis state has N+ = N-
      norm2 += p;
      pump += p * static_cast<double>(evolution.n0 - 2 * n);
      pairs += p * npairs;
      pairs2 += p * npairs * npairs;
      lz_mean += p * lz;
      lz2 += p * lz * lz;
    }
    rec.n0_mean = pump;
    rec.n_pair_mean = pairs;
    rec.var_npair = pairs2 - pairs * pairs;
    rec.var_lz = lz2 - lz_mean * lz_mean;
    rec.norm = std::sqrt(norm2);
    records.push_back(rec);
  }
  return records;
}

std::vector<double> energy_expectation(const PairBasisHamiltonian& h, const FockEvolution& evolution) {
  const long d = h.dim();
  std::vector<double> energies;
  energies.reserve(evolution.times.size());
  for (std::size_t j = 0; j < evolution.times.size(); ++j) {
    const Eigen::VectorXcd psi = evolution.amplitudes.col(j);
    double e = 0.0;
    for (long n = 0; n < d; ++n) {
      e += h.diag[n] * std::norm(psi[n]);
      if (n + 1 < d) e += 2.0 * h.sub[n] * (std::conj(psi[n + 1]) * psi[n]).real();
    }
    energies.push_back(e);
  }
  return energies;
}

}  // namespace spinpair
