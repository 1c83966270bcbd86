#include "opo/steady_state.hpp"

#include <cmath>

namespace opo {

namespace {

void require_dissipative(const CavityLosses& losses) {
  for (int n = 0; n < kCarriers; ++n) {
    if (losses.gamma[n] < 0 || losses.gamma_prime[n] < 0)
      throw ConfigError("cavity losses must be non-negative");
    if (losses.total(n) <= 0.0)
      throw DegenerateCavityError("zero total loss on carrier " + std::to_string(n) +
                                  " (infinite finesse)");
  }
}

}  // namespace

double threshold_strength(const CavityLosses& losses) {
  require_dissipative(losses);
  const double gt0 = losses.total(0);
  const double gt1 = losses.total(1);
  const double gt2 = losses.total(2);
  const double g0 = losses.gamma[0];
  if (g0 <= 0.0) throw DegenerateCavityError("pump coupler loss must be positive");
  const double num = std::pow(1.0 - std::exp(-gt0), 2) * (std::exp(gt1) - 1.0) *
                     (std::exp(gt2) - 1.0);
  return num / (4.0 * (1.0 - std::exp(-2.0 * g0)));
}

MeanFields mean_fields(const OperatingPoint& op, const CavityLosses& losses) {
  if (op.sigma < 0.0) throw ConfigError("sigma must be non-negative");
  const double th = threshold_strength(losses);
  const double gt0 = losses.total(0);
  const double g0 = losses.gamma[0];

  // clamped pump intensity, independent of sigma above threshold
  const double pump_clamp_sq =
      (1.0 - std::exp(-2.0 * g0)) / std::pow(1.0 - std::exp(-gt0), 2) * th;
  const double pump_clamp = std::sqrt(pump_clamp_sq);

  MeanFields mf;
  mf.phonon_ref = pump_clamp;
  if (op.sigma >= 1.0) {
    mf.chi_alpha[0] = pump_clamp;
    for (int j = 1; j <= 2; ++j) {
      const double gtj = losses.total(j);
      const double sq = std::exp(2.0 * gt0) * (1.0 - std::exp(-2.0 * g0)) *
                        (std::sqrt(op.sigma) - 1.0) /
                        ((std::exp(gt0) - 1.0) * (std::exp(gtj) - 1.0)) * th;
      mf.chi_alpha[j] = std::sqrt(sq);
    }
  } else {
    // below threshold: no downconverted carriers, resonant pump build-up
    // scales linearly with pump power
    mf.chi_alpha[0] = std::sqrt(op.sigma * pump_clamp_sq);
    mf.chi_alpha[1] = 0.0;
    mf.chi_alpha[2] = 0.0;
  }
  return mf;
}

}  // namespace opo
