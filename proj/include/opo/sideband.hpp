#pragma once

#include "opo/layout.hpp"

namespace opo {

enum class BasisSign { S, A };

// Intracavity carrier amplitudes. The crystal coupling chi never appears on
// its own in the model, so the stored values are the products chi * alpha_n
// (pump, signal, idler). phonon_ref is the amplitude scale at which the
// optomechanical couplings are quoted: the phonon module consumes
// chi_alpha[n] / phonon_ref, and the steady state sets phonon_ref to the
// clamped pump amplitude so fitted per-pass couplings apply directly.
// Hand-built values default to phonon_ref = 1 (amplitudes used as stored).
struct MeanFields {
  Complex chi_alpha[kCarriers] = {0.0, 0.0, 0.0};
  double phonon_ref = 1.0;
};

// 6x6 single-pass drift of the symmetric (S) or antisymmetric (A) sideband
// combinations: pump rows couple to signal/idler annihilations through
// -chi*alpha_2, -chi*alpha_1; the downconverted rows carry +chi*alpha_0 on
// creation slots for S and -chi*alpha_0 for A.
ComplexMatrix drift_matrix_sa(BasisSign sign, const MeanFields& mf);

// exp of the drift; mean fields are constant along the crystal, so the
// path-ordered exponential reduces to a plain expm.
ComplexMatrix gain_matrix_sa(BasisSign sign, const MeanFields& mf);

// The involutive change of basis between frequency sidebands and S/A
// combinations: (1/sqrt2) [[I6, I6], [I6, -I6]]. Real, symmetric,
// orthogonal, its own inverse.
ComplexMatrix lambda_transform();

// 12x12 frequency-basis drift Lambda (M_s (+) M_a) Lambda.
ComplexMatrix drift_matrix_full(const MeanFields& mf);

// 12x12 frequency-basis gain Lambda (G_s (+) G_a) Lambda.
ComplexMatrix gain_matrix_full(const MeanFields& mf);

}  // namespace opo
