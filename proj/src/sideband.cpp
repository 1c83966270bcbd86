#include "opo/sideband.hpp"

#include <cmath>

namespace opo {

ComplexMatrix drift_matrix_sa(BasisSign sign, const MeanFields& mf) {
  const Complex a0 = mf.chi_alpha[0];
  const Complex a1 = mf.chi_alpha[1];
  const Complex a2 = mf.chi_alpha[2];
  const double s = (sign == BasisSign::S) ? 1.0 : -1.0;

  ComplexMatrix m = ComplexMatrix::Zero(6, 6);
  // pump pair: driven by the beam-splitter-like exchange with signal/idler
  m(0, 2) = -a2;
  m(0, 4) = -a1;
  m(1, 3) = -std::conj(a2);
  m(1, 5) = -std::conj(a1);
  // signal pair: exchange with pump plus the squeezing term on idler creation
  m(2, 0) = std::conj(a2);
  m(2, 5) = s * a0;
  m(3, 1) = a2;
  m(3, 4) = s * std::conj(a0);
  // idler pair
  m(4, 0) = std::conj(a1);
  m(4, 3) = s * a0;
  m(5, 1) = a1;
  m(5, 2) = s * std::conj(a0);
  return m;
}

ComplexMatrix gain_matrix_sa(BasisSign sign, const MeanFields& mf) {
  return expm(drift_matrix_sa(sign, mf));
}

ComplexMatrix lambda_transform() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix l = ComplexMatrix::Zero(kOpticalSlots, kOpticalSlots);
  for (int i = 0; i < 6; ++i) {
    l(i, i) = inv_sqrt2;
    l(i, i + 6) = inv_sqrt2;
    l(i + 6, i) = inv_sqrt2;
    l(i + 6, i + 6) = -inv_sqrt2;
  }
  return l;
}

ComplexMatrix drift_matrix_full(const MeanFields& mf) {
  const ComplexMatrix l = lambda_transform();
  return l * direct_sum(drift_matrix_sa(BasisSign::S, mf),
                        drift_matrix_sa(BasisSign::A, mf)) *
         l;
}

ComplexMatrix gain_matrix_full(const MeanFields& mf) {
  const ComplexMatrix l = lambda_transform();
  return l * direct_sum(gain_matrix_sa(BasisSign::S, mf),
                        gain_matrix_sa(BasisSign::A, mf)) *
         l;
}

}  // namespace opo
