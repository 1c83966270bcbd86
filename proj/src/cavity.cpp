#include "opo/cavity.hpp"

#include <cmath>
#include <numbers>

namespace opo {

namespace {

ComplexMatrix per_carrier_diagonal(const double (&value)[kCarriers]) {
  ComplexMatrix d = ComplexMatrix::Zero(kOpticalSlots, kOpticalSlots);
  for (int block = 0; block < 2; ++block)
    for (int n = 0; n < kCarriers; ++n) {
      d(slot(block, n, false), slot(block, n, false)) = value[n];
      d(slot(block, n, true), slot(block, n, true)) = value[n];
    }
  return d;
}

}  // namespace

MirrorSet mirror_set(const CavityLosses& losses) { return mirror_set(losses, 1.0); }

MirrorSet mirror_set(const CavityLosses& losses, double transmission_scale) {
  double r[kCarriers], t[kCarriers], rp[kCarriers], tp[kCarriers];
  for (int n = 0; n < kCarriers; ++n) {
    r[n] = std::exp(-losses.gamma[n]);
    t[n] = transmission_scale * std::sqrt(1.0 - r[n] * r[n]);
    rp[n] = std::exp(-losses.gamma_prime[n]);
    tp[n] = transmission_scale * std::sqrt(1.0 - rp[n] * rp[n]);
  }
  return MirrorSet{per_carrier_diagonal(r), per_carrier_diagonal(t),
                   per_carrier_diagonal(rp), per_carrier_diagonal(tp)};
}

PhaseMatrix phase_matrix(const OperatingPoint& op) {
  const double omega_angular = 2.0 * std::numbers::pi * op.analysis_frequency_hz;
  ComplexMatrix phi = ComplexMatrix::Zero(kOpticalSlots, kOpticalSlots);
  for (int block = 0; block < 2; ++block) {
    const double sideband = (block == 0) ? omega_angular : -omega_angular;
    for (int n = 0; n < kCarriers; ++n) {
      if (op.fsr_hz[n] <= 0.0) throw ConfigError("free spectral range must be positive");
      const double p = (op.detuning_rad_s[n] + sideband) /
                       (2.0 * 2.0 * std::numbers::pi * op.fsr_hz[n]);
      phi(slot(block, n, false), slot(block, n, false)) = p;
      phi(slot(block, n, true), slot(block, n, true)) = -p;
    }
  }
  return PhaseMatrix{phi};
}

ComplexMatrix phase_factor(const PhaseMatrix& phase) {
  const Eigen::Index n = phase.phi.rows();
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    e(i, i) = std::exp(Complex(0.0, -1.0) * phase.phi(i, i));
  return e;
}

ComplexMatrix round_trip_matrix(const ComplexMatrix& R, const ComplexMatrix& R_prime,
                                const ComplexMatrix& E, const ComplexMatrix& G) {
  return R * E * G * R_prime * E * G;
}

ComplexMatrix cavity_loop(const MirrorSet& mirrors, const PhaseMatrix& phase,
                          const ComplexMatrix& gain) {
  const ComplexMatrix E = phase_factor(phase);
  const ComplexMatrix loop = round_trip_matrix(mirrors.R, mirrors.R_prime, E, gain);
  const Eigen::Index n = loop.rows();
  try {
    return solve(ComplexMatrix::Identity(n, n) - loop, ComplexMatrix::Identity(n, n));
  } catch (const SingularMatrixError& e) {
    throw OscillationBoundaryError(
        std::string("cavity loop at or beyond the oscillation boundary: ") + e.what());
  }
}

ScatterResult scatter(const ComplexMatrix& R, const ComplexMatrix& T,
                      const ComplexMatrix& R_prime, const ComplexMatrix& T_prime,
                      const ComplexMatrix& E, const ComplexMatrix& G) {
  const Eigen::Index n = R.rows();
  const ComplexMatrix half_pass = E * G;  // one crystal traversal plus phase
  const ComplexMatrix loop = R * half_pass * R_prime * half_pass;
  ComplexMatrix d;
  try {
    d = solve(ComplexMatrix::Identity(n, n) - loop, ComplexMatrix::Identity(n, n));
  } catch (const SingularMatrixError& e) {
    throw OscillationBoundaryError(
        std::string("cavity loop at or beyond the oscillation boundary: ") + e.what());
  }
  ScatterResult out;
  out.reflection = R - T * half_pass * R_prime * half_pass * d * T;
  out.transmission =
      T * half_pass *
      (ComplexMatrix::Identity(n, n) + R_prime * half_pass * d * R * half_pass) * T_prime;
  return out;
}

ComplexMatrix reflection_matrix(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                const ComplexMatrix& gain) {
  const ComplexMatrix E = phase_factor(phase);
  return scatter(mirrors.R, mirrors.T, mirrors.R_prime, mirrors.T_prime, E, gain).reflection;
}

ComplexMatrix transmission_matrix(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                  const ComplexMatrix& gain) {
  const ComplexMatrix E = phase_factor(phase);
  return scatter(mirrors.R, mirrors.T, mirrors.R_prime, mirrors.T_prime, E, gain).transmission;
}

}  // namespace opo
