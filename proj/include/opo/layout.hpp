#pragma once

#include "opo/numerics.hpp"

namespace opo {

// Operator-vector layout used by every matrix in the model.
//
// Frequency basis (12 slots): the +Omega sideband block then the -Omega
// block; inside a block the carriers run pump (0), signal (1), idler (2),
// each contributing an (annihilation, creation) slot pair.
// S/A basis (12 slots): six symmetric-combination slots then six
// antisymmetric ones, same per-carrier pair layout inside each block.
// Extended layout (18 slots): the 12 optical slots followed by three
// phonon-mode pairs (d1, d1*, d2, d2*, d3, d3*).
enum class Basis { FrequencySidebands, SymmetricAntisymmetric };

inline constexpr int kCarriers = 3;  // pump, signal, idler
inline constexpr int kOpticalSlots = 12;
inline constexpr int kPhononSlots = 6;
inline constexpr int kExtendedSlots = kOpticalSlots + kPhononSlots;

// block: 0 = +Omega (or S), 1 = -Omega (or A)
constexpr int slot(int block, int carrier, bool creation) {
  return 6 * block + 2 * carrier + (creation ? 1 : 0);
}

constexpr int phonon_slot(int mech_mode, bool creation) {
  return kOpticalSlots + 2 * mech_mode + (creation ? 1 : 0);
}

// Commutator metric K = diag(+1, -1, +1, ...). Any map generated by a
// bilinear Hamiltonian satisfies G K G^dagger = K (Bogoliubov condition).
inline ComplexMatrix commutator_metric(int dim) {
  ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) k(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
  return k;
}

// Symplectic form over quadrature pairs (p, q) with [p, q] = 2i:
// per pair [[0, 1], [-1, 0]].
inline RealMatrix symplectic_form(int dim) {
  RealMatrix w = RealMatrix::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; i += 2) {
    w(i, i + 1) = 1.0;
    w(i + 1, i) = -1.0;
  }
  return w;
}

}  // namespace opo
