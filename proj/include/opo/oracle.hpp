#pragma once

#include "opo/cavity.hpp"
#include "opo/config.hpp"
#include "opo/covariance.hpp"
#include "opo/numerics.hpp"
#include "opo/phonon.hpp"
#include "opo/sideband.hpp"

#include <string>

namespace opo {

// Outcome of one independent cross-check.
struct OracleReport {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Fixed-step classic Runge-Kutta integration of dA/dxi = M A over one unit
// of propagation length, starting from the identity. Deliberately avoids
// the matrix exponential so the two can check each other.
ComplexMatrix rk4_gain(const ComplexMatrix& m, int steps);

// Closed-form single-mode cavity reflection amplitude for one round-trip
// phase phi: r - t^2 r' e^{-2i phi} / (1 - r r' e^{-2i phi}).
Complex scalar_fabry_perot(double gamma, double gamma_prime, double phi);

// Recomputes the output covariance through the sideband-frequency basis
// (gain conjugated into that basis, scattering solved there) and compares
// it against the production pipeline, which works in the S/A basis.
OracleReport dual_basis_check(const OpoConfig& cfg);

// Frequency-basis pipeline used by the oracle; exposed so tests can probe
// it directly.
CovarianceMatrix frequency_basis_covariance(const OpoConfig& cfg);

}  // namespace opo
