#pragma once

#include "opo/cavity.hpp"

namespace opo {

// Optomechanical couplings g[n][j] between optical carrier n and mechanical
// mode j, quoted as per-pass values at the reference amplitude carried by
// MeanFields (the clamped pump value for steady-state fields), and the mean
// thermal occupation of the phonon reservoirs.
struct PhononParams {
  double g[kCarriers][kCarriers] = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  double n_th = 0.0;
};

// Off-diagonal blocks of the extended drift. With a_n the carrier amplitude
// normalized to the reference, the per-pair blocks are
//   L_nj  = g_nj [[a_n, 0], [0, -a_n*]]   (+Omega sidebands)
//   L'_nj = g_nj [[0, a_n], [-a_n*, 0]]   (-Omega sidebands)
// J stacks (L over L') into 12x6, K = (L^dagger | -L'^dagger) is 6x12.
struct OptomechBlocks {
  ComplexMatrix J;
  ComplexMatrix K;
};
OptomechBlocks optomech_blocks(const PhononParams& pp, const MeanFields& mf);

// 18x18 drift [[M_chi, iJ], [iK, 0]]; the phonon-phonon block vanishes.
ComplexMatrix extended_drift(const MeanFields& mf, const PhononParams& pp);

// expm of the extended drift.
ComplexMatrix extended_gain(const MeanFields& mf, const PhononParams& pp);

// Lifts of the 12x12 cavity matrices to the 18-slot layout: phonon slots
// see no mirrors (reflection block zero, transmission block identity) and
// no propagation phase, i.e. each crystal pass couples to a fresh bath.
ComplexMatrix lift_mirror(const ComplexMatrix& optical, double phonon_diagonal);
PhaseMatrix lift_phase(const PhaseMatrix& phase);

// Cavity scattering with the lifted matrices; same algebra as the cavity
// module at 18x18.
ScatterResult extended_scattering(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                  const ComplexMatrix& extended_gain);

// Quadrature covariance of the stacked (input (+) loss-port) drives:
// optical blocks are vacuum (identity), phonon blocks thermal at
// (1 + 2 n_th). 36x36 = two 18-slot ports.
RealMatrix thermal_input_covariance(const PhononParams& pp);

}  // namespace opo
