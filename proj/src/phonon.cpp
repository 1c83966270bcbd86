#include "opo/phonon.hpp"

#include <cmath>

namespace opo {

OptomechBlocks optomech_blocks(const PhononParams& pp, const MeanFields& mf) {
  if (!(mf.phonon_ref > 0.0))
    throw ConfigError("optomech_blocks: reference amplitude must be positive");
  ComplexMatrix L = ComplexMatrix::Zero(6, 6);
  ComplexMatrix Lp = ComplexMatrix::Zero(6, 6);
  for (int n = 0; n < kCarriers; ++n) {
    const Complex a = mf.chi_alpha[n] / mf.phonon_ref;
    for (int j = 0; j < kCarriers; ++j) {
      const double g = pp.g[n][j];
      if (g == 0.0) continue;
      L(2 * n, 2 * j) = g * a;
      L(2 * n + 1, 2 * j + 1) = -g * std::conj(a);
      Lp(2 * n, 2 * j + 1) = g * a;
      Lp(2 * n + 1, 2 * j) = -g * std::conj(a);
    }
  }
  OptomechBlocks b;
  b.J = ComplexMatrix::Zero(kOpticalSlots, kPhononSlots);
  b.J.topRows(6) = L;
  b.J.bottomRows(6) = Lp;
  b.K = ComplexMatrix::Zero(kPhononSlots, kOpticalSlots);
  b.K.leftCols(6) = L.adjoint();
  b.K.rightCols(6) = -Lp.adjoint();
  return b;
}

ComplexMatrix extended_drift(const MeanFields& mf, const PhononParams& pp) {
  const OptomechBlocks b = optomech_blocks(pp, mf);
  const Complex i(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(kExtendedSlots, kExtendedSlots);
  m.topLeftCorner(kOpticalSlots, kOpticalSlots) = drift_matrix_full(mf);
  m.topRightCorner(kOpticalSlots, kPhononSlots) = i * b.J;
  m.bottomLeftCorner(kPhononSlots, kOpticalSlots) = i * b.K;
  return m;
}

ComplexMatrix extended_gain(const MeanFields& mf, const PhononParams& pp) {
  return expm(extended_drift(mf, pp));
}

ComplexMatrix lift_mirror(const ComplexMatrix& optical, double phonon_diagonal) {
  ComplexMatrix m = ComplexMatrix::Zero(kExtendedSlots, kExtendedSlots);
  m.topLeftCorner(kOpticalSlots, kOpticalSlots) = optical;
  for (int i = kOpticalSlots; i < kExtendedSlots; ++i) m(i, i) = phonon_diagonal;
  return m;
}

PhaseMatrix lift_phase(const PhaseMatrix& phase) {
  ComplexMatrix phi = ComplexMatrix::Zero(kExtendedSlots, kExtendedSlots);
  phi.topLeftCorner(kOpticalSlots, kOpticalSlots) = phase.phi;
  return PhaseMatrix{phi};
}

ScatterResult extended_scattering(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                  const ComplexMatrix& egain) {
  if (egain.rows() != kExtendedSlots || egain.cols() != kExtendedSlots)
    throw DimensionError("extended_scattering: gain must be 18x18");
  const ComplexMatrix E = phase_factor(lift_phase(phase));
  return scatter(lift_mirror(mirrors.R, 0.0), lift_mirror(mirrors.T, 1.0),
                 lift_mirror(mirrors.R_prime, 0.0), lift_mirror(mirrors.T_prime, 1.0), E,
                 egain);
}

RealMatrix thermal_input_covariance(const PhononParams& pp) {
  if (pp.n_th < 0.0) throw ConfigError("thermal occupation must be non-negative");
  RealMatrix port = RealMatrix::Identity(kExtendedSlots, kExtendedSlots);
  for (int i = kOpticalSlots; i < kExtendedSlots; ++i) port(i, i) = 1.0 + 2.0 * pp.n_th;
  RealMatrix v = RealMatrix::Zero(2 * kExtendedSlots, 2 * kExtendedSlots);
  v.topLeftCorner(kExtendedSlots, kExtendedSlots) = port;
  v.bottomRightCorner(kExtendedSlots, kExtendedSlots) = port;
  return v;
}

}  // namespace opo
