#pragma once

#include "opo/config.hpp"

namespace opo {

// Real symmetric matrix over quadratures ordered (p, q) per slot pair,
// shot-noise normalized (vacuum variance = 1, [p, q] = 2i). Physicality is
// the uncertainty condition V + i*symplectic_form >= -1e-8.
using CovarianceMatrix = RealMatrix;

struct SABlocks {
  RealMatrix v_s;   // 6x6 symmetric-combination block
  RealMatrix v_a;   // 6x6 antisymmetric block
  RealMatrix c_sa;  // 6x6 cross block

  double sa_norm() const { return c_sa.cwiseAbs().maxCoeff(); }
};

// N: (a, a*) -> (p, q) with a = (p + iq)/2, per-pair block [[1, 1], [-i, i]].
ComplexMatrix quadrature_map(int slots);
ComplexMatrix quadrature_map_inverse(int slots);

// End-to-end pipeline: mean fields -> gain -> cavity scattering ->
// quadrature covariance of the reflected modes. With phonons enabled the
// 18-mode state is computed and the phonon slots are traced out (dropped),
// which is exact for Gaussian marginals. Detection efficiency is NOT
// applied here; see apply_detection.
//
// Internally the chain is evaluated in the S/A basis, where the crystal
// gain is block diagonal and the only S/A coupling enters through the
// sideband phase offsets; the result is rotated to the frequency basis at
// the end. The straightforward frequency-basis chain lives in the oracle
// module as an independent cross-check.
CovarianceMatrix output_covariance(const OpoConfig& cfg);

// Same pipeline from explicit parts (used by sweeps and tests).
CovarianceMatrix output_covariance(const OperatingPoint& op, const CavityLosses& losses,
                                   const PhononParams& pp);

// Variant that forces phi(+Omega) = phi(-Omega) on every carrier: the
// "symmetrized phases" counterfactual that removes the S/A coupling.
CovarianceMatrix output_covariance_symmetrized(const OperatingPoint& op,
                                               const CavityLosses& losses,
                                               const PhononParams& pp);

// Splits a frequency-basis covariance into S/A blocks (conjugation by the
// quadrature-space image of the basis change, done blockwise so exact
// cancellations survive).
SABlocks to_sa_blocks(const CovarianceMatrix& v);
CovarianceMatrix from_sa_blocks(const SABlocks& blocks);

// Detection efficiency as a per-carrier beam-splitter admixture
// V -> sqrt(E) V sqrt(E) + (I - E), applied to both sidebands of a carrier.
CovarianceMatrix apply_detection(const CovarianceMatrix& v,
                                 const std::array<double, kCarriers>& eta);

struct PhysicalityReport {
  double min_uncertainty_eigenvalue;  // min eig of V + i*Omega_sympl
  RealVector symplectic_eigenvalues;  // >= 1 for physical states
  double purity;                      // 1 / sqrt(det V), clipped to [0, 1]
};
PhysicalityReport physicality_report(const CovarianceMatrix& v);

}  // namespace opo
