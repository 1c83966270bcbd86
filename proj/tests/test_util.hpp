#pragma once

#include "opo/config.hpp"

#include <random>

namespace opo::test {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

// Losses of the reference cavity (70% pump coupler, 96% infrared couplers,
// 99.5% end mirrors).
inline CavityLosses reference_losses() { return reference_config().losses(); }

inline OperatingPoint reference_point(double sigma, double omega_hz = 21e6) {
  OperatingPoint op;
  op.sigma = sigma;
  op.analysis_frequency_hz = omega_hz;
  for (int n = 0; n < kCarriers; ++n) op.fsr_hz[n] = 4.3e9;
  return op;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  Complex complex(double scale) {
    return Complex(uniform(-scale, scale), uniform(-scale, scale));
  }
  MeanFields fields(double scale) {
    MeanFields mf;
    for (int n = 0; n < kCarriers; ++n) mf.chi_alpha[n] = complex(scale);
    return mf;
  }
  ComplexMatrix matrix(int n, double scale) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = complex(scale);
    return m;
  }
};

}  // namespace opo::test
