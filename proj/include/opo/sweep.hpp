#pragma once

#include "opo/config.hpp"
#include "opo/covariance.hpp"

#include <string>
#include <vector>

namespace opo {

enum class SweepAxis { Sigma, Omega };

// Uniform grid over the swept axis.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double point(int i) const {
    if (count <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
};

// Parses "start:stop:count"; throws ConfigError on malformed input.
Grid parse_grid(const std::string& text);

// One evaluated grid point. Points where the model throws are recorded
// with ok = false and the error message; the sweep keeps going.
struct SweepPoint {
  double value = 0.0;
  bool ok = false;
  std::string error;
  CovarianceMatrix v;
  SABlocks sa;
};

SweepPoint evaluate_point(const OpoConfig& cfg, SweepAxis axis, double value);

// OpenMP-parallel sweep and the serial reference it is checked against.
// Both produce identical results point for point.
std::vector<SweepPoint> run_sweep(const OpoConfig& cfg, SweepAxis axis, const Grid& grid);
std::vector<SweepPoint> run_sweep_serial(const OpoConfig& cfg, SweepAxis axis,
                                         const Grid& grid);

}  // namespace opo
