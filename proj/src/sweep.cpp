#include "opo/sweep.hpp"

#include <cstdio>
#include <stdexcept>

namespace opo {

Grid parse_grid(const std::string& text) {
  Grid g;
  char trailing = '\0';
  const int matched = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.count,
                                  &trailing);
  if (matched != 3) throw ConfigError("grid must be start:stop:count, got '" + text + "'");
  if (g.count < 1) throw ConfigError("grid needs at least one point");
  if (g.count == 1 && g.start != g.stop)
    throw ConfigError("single-point grid must have start == stop");
  return g;
}

SweepPoint evaluate_point(const OpoConfig& cfg, SweepAxis axis, double value) {
  SweepPoint p;
  p.value = value;
  OpoConfig local = cfg;
  switch (axis) {
    case SweepAxis::Sigma:
      local.sigma = value;
      break;
    case SweepAxis::Omega:
      local.analysis_frequency_hz = value;
      break;
  }
  try {
    p.v = output_covariance(local);
    if (local.detection_enabled) p.v = apply_detection(p.v, local.detection_efficiency);
    p.sa = to_sa_blocks(p.v);
    p.ok = true;
  } catch (const std::exception& e) {
    p.ok = false;
    p.error = e.what();
  }
  return p;
}

std::vector<SweepPoint> run_sweep(const OpoConfig& cfg, SweepAxis axis, const Grid& grid) {
  std::vector<SweepPoint> out(grid.count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < grid.count; ++i) out[i] = evaluate_point(cfg, axis, grid.point(i));
  return out;
}

std::vector<SweepPoint> run_sweep_serial(const OpoConfig& cfg, SweepAxis axis,
                                         const Grid& grid) {
  std::vector<SweepPoint> out(grid.count);
  for (int i = 0; i < grid.count; ++i) out[i] = evaluate_point(cfg, axis, grid.point(i));
  return out;
}

}  // namespace opo
