#pragma once

#include "opo/steady_state.hpp"

namespace opo {

// Diagonal 12x12 mirror matrices in the frequency basis: per-carrier
// amplitude reflection/transmission repeated on both slots of a pair and on
// both sideband blocks. R, T belong to the input coupler; R_prime, T_prime
// to the lumped spurious-loss port. r^2 + t^2 = 1 per mirror.
struct MirrorSet {
  ComplexMatrix R, T, R_prime, T_prime;
};

// Diagonal 12x12 one-way propagation phases. Annihilation and creation
// slots of the same mode carry opposite signs; the -Omega block repeats the
// +Omega block with the sideband sign flipped.
struct PhaseMatrix {
  ComplexMatrix phi;
};

MirrorSet mirror_set(const CavityLosses& losses);

// Variant with a deliberate break of r^2 + t^2 = 1 used as a validation
// negative control (transmission scaled by the given factor).
MirrorSet mirror_set(const CavityLosses& losses, double transmission_scale);

// One-way phase per slot, carrier resonance multiples removed:
// phi_n(+-Omega) = (Delta_n +- Omega_angular) / (2 * 2pi * FSR_n).
PhaseMatrix phase_matrix(const OperatingPoint& op);

// diag(e^{-i phi}).
ComplexMatrix phase_factor(const PhaseMatrix& phase);

// One cavity round trip R E G R' E G (crystal traversed twice, phase and
// gain once per direction). Dimension-agnostic: used at 12x12 and, with
// phonon-lifted matrices, at 18x18.
ComplexMatrix round_trip_matrix(const ComplexMatrix& R, const ComplexMatrix& R_prime,
                                const ComplexMatrix& E, const ComplexMatrix& G);

// D = (I - round trip)^{-1}, the resummed loop, via a linear solve.
// A singular loop means the linearized round-trip gain reached unity and
// surfaces as OscillationBoundaryError.
ComplexMatrix cavity_loop(const MirrorSet& mirrors, const PhaseMatrix& phase,
                          const ComplexMatrix& gain);

// Composite input-output maps for the reflected modes:
//   reflection   R_chi = R - T E G R' E G D T        (input port -> output)
//   transmission T_chi = T E G (I + R' E G D R E G) T'  (loss port -> output)
struct ScatterResult {
  ComplexMatrix reflection;
  ComplexMatrix transmission;
};
ScatterResult scatter(const ComplexMatrix& R, const ComplexMatrix& T,
                      const ComplexMatrix& R_prime, const ComplexMatrix& T_prime,
                      const ComplexMatrix& E, const ComplexMatrix& G);

ComplexMatrix reflection_matrix(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                const ComplexMatrix& gain);
ComplexMatrix transmission_matrix(const MirrorSet& mirrors, const PhaseMatrix& phase,
                                  const ComplexMatrix& gain);

}  // namespace opo
