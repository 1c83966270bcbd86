#pragma once

#include "opo/sideband.hpp"

namespace opo {

// Amplitude loss parameters per carrier: the input coupler reflects
// r_n = exp(-gamma_n), the lumped spurious-loss port r'_n = exp(-gamma'_n).
struct CavityLosses {
  double gamma[kCarriers] = {0.0, 0.0, 0.0};
  double gamma_prime[kCarriers] = {0.0, 0.0, 0.0};
  double total(int n) const { return gamma[n] + gamma_prime[n]; }
};

struct OperatingPoint {
  double sigma = 0.0;                  // pump power over threshold power
  double analysis_frequency_hz = 0.0;  // Omega / 2pi
  double detuning_rad_s[kCarriers] = {0.0, 0.0, 0.0};
  double fsr_hz[kCarriers] = {0.0, 0.0, 0.0};
};

// chi^2 |alpha_in|^2 at threshold:
// (1 - e^{-gt0})^2 (e^{gt1} - 1)(e^{gt2} - 1) / (4 (1 - e^{-2 g0})).
// Throws DegenerateCavityError when any carrier has zero total loss.
double threshold_strength(const CavityLosses& losses);

// Intracavity amplitudes from the threshold-scaled formulas. Above
// threshold the pump clamps at its threshold value (no sigma dependence)
// and the downconverted intensities grow as sqrt(sigma) - 1. Below
// threshold the downconverted fields vanish and the pump intensity scales
// linearly with sigma. All phases are fixed real and non-negative.
MeanFields mean_fields(const OperatingPoint& op, const CavityLosses& losses);

}  // namespace opo
