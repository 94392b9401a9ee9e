#ifndef SPINPAIR_FOCK_HPP
#define SPINPAIR_FOCK_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace spinpair {

// Symmetric pair basis {|N0 - 2n, n, n>}, n = 0..N0/2: the spin-exchange
// Hamiltonian creates and destroys (+1, -1) atoms strictly in pairs, so the
// two side-mode occupations stay equal and the basis closes. Dimension is
// N0/2 + 1; N0 must be even.
struct PairBasisState {
  long n0_atoms = 0;  // pump occupation
  long n_pairs = 0;
};

// chi (c+^dag c-^dag c0 c0 + h.c.) restricted to the pair basis, plus an
// optional diagonal detuning_offset * n for off-shell pairs. Real symmetric
// tridiagonal with
//   <n+1|H|n> = chi (n+1) sqrt((N0-2n)(N0-2n-1)).
struct PairBasisHamiltonian {
  long n0 = 0;
  double chi = 0.0;
  double detuning_offset = 0.0;
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;  // subdiagonal, size dim-1

  long dim() const { return n0 / 2 + 1; }
  Eigen::MatrixXd dense() const;
};

// Throws OddAtomNumber when n0 is odd (the pair basis does not close).
PairBasisHamiltonian build_hamiltonian(long n0, double chi, double detuning_offset = 0.0);

struct FockEvolution {
  long n0 = 0;
  double chi = 0.0;
  std::vector<double> times;
  Eigen::MatrixXcd amplitudes;  // dim x times.size(), unit columns
};

// Exact unitary evolution from the all-pump state (or the given initial
// basis state) at the requested times, via the spectral decomposition of the
// tridiagonal Hamiltonian. Throws NonUnitary if any output norm drifts from
// 1 by more than 1e-8 or turns non-finite.
FockEvolution evolve(const PairBasisHamiltonian& h, const std::vector<double>& times,
                     std::optional<PairBasisState> initial = std::nullopt);

struct FockObservables {
  double t = 0.0;
  double n0_mean = 0.0;
  double n_pair_mean = 0.0;
  double var_lz = 0.0;  // variance of N+ - N-; identically zero in this basis
  double var_npair = 0.0;
  double norm = 1.0;
};

std::vector<FockObservables> observables(const FockEvolution& evolution);

// <H> along the evolution, for conservation checks.
std::vector<double> energy_expectation(const PairBasisHamiltonian& h, const FockEvolution& evolution);

}  // namespace spinpair

#endif
