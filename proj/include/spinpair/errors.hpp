#ifndef SPINPAIR_ERRORS_HPP
#define SPINPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinpair {

// Requested side-mode momentum has no energy-conserving partner on the shell.
struct ClosedChannel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quadrature did not settle below its tolerance under node doubling.
struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every point of a gain scan underflowed to zero; normalization is undefined.
struct AllZeroScan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exp(rate*t) would not be representable; the linearized model has left its
// regime of validity anyway.
struct Overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The symmetric pair basis requires an even atom number.
struct OddAtomNumber : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State norm drifted beyond budget during propagation.
struct NonUnitary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient vector does not have unit norm.
struct NotNormalized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spinpair

#endif
