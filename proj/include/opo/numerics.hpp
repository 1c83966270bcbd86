#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace opo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct SingularMatrixError : Error {
  SingularMatrixError(const std::string& msg, double pivot_magnitude)
      : Error(msg), pivot(pivot_magnitude) {}
  double pivot;
};
struct DegenerateCavityError : Error {
  using Error::Error;
};
struct OscillationBoundaryError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct PhysicalityError : Error {
  using Error::Error;
};

// exp(m) by scaling-and-squaring with a Taylor tail summed to machine
// precision. Every matrix in this model is at most 18x18 with norm O(1),
// so the plain series after scaling to norm <= 1/2 is accurate to ~1e-15
// and keeps nilpotent blocks exact.
ComplexMatrix expm(const ComplexMatrix& m);

// Solves a x = b by partial-pivot LU, never forming an explicit inverse.
// Throws SingularMatrixError (carrying the offending pivot) when the
// smallest pivot drops below 1e-14; the physical case that trips this is
// the cavity round-trip map exactly at the oscillation threshold.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

// Block-diagonal composition diag(a, b).
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace opo
