#pragma once

#include <array>
#include <string>

#include "opo/phonon.hpp"

namespace opo {

// Single source of truth for a run. Mirror reflectivities are quoted as
// intensity values (lab convention) and converted to amplitude loss
// parameters via gamma = -ln sqrt(R). Keys in the JSON form carry explicit
// units (fsr_hz, detuning_rad_s, ...).
struct OpoConfig {
  std::array<double, kCarriers> coupler_reflectivity{0.70, 0.96, 0.96};
  std::array<double, kCarriers> end_mirror_reflectivity{0.995, 0.995, 0.995};
  std::array<double, kCarriers> fsr_hz{4.3e9, 4.3e9, 4.3e9};
  std::array<double, kCarriers> detuning_rad_s{0.0, 0.0, 0.0};
  double analysis_frequency_hz = 21e6;
  double sigma = 1.5;

  bool phonons_enabled = false;
  double phonon_g[kCarriers][kCarriers] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double n_th = 0.0;

  bool detection_enabled = false;
  std::array<double, kCarriers> detection_efficiency{1.0, 1.0, 1.0};

  std::string output_format = "csv";
  double threshold_power_mw = 0.0;  // documentation only; the model consumes sigma

  // Validation negative-control hook: scales mirror transmissions so that
  // r^2 + t^2 = 1 is deliberately broken when != 1.
  double debug_transmission_scale = 1.0;

  CavityLosses losses() const;
  OperatingPoint operating_point() const;
  PhononParams phonon_params() const;  // zero couplings when phonons are off
  MirrorSet mirrors() const;
};

// Sec.-VII-style reference parameters: 70% pump coupler, 96% infrared
// output coupler, 99.5% cross-band mirrors, FSR 4.3 GHz, 21 MHz analysis
// frequency, eta = (0.65, 0.87, 0.87), quoted phonon couplings, n_th = 100.
OpoConfig reference_config();

// Throws ConfigError with a field-level message on any violation.
void validate_config(const OpoConfig& cfg);

OpoConfig parse_config(const std::string& json_text);
OpoConfig load_config(const std::string& path);
std::string config_to_json(const OpoConfig& cfg);

}  // namespace opo
