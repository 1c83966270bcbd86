#include "opo/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace opo {

using nlohmann::json;

CavityLosses OpoConfig::losses() const {
  CavityLosses l;
  for (int n = 0; n < kCarriers; ++n) {
    l.gamma[n] = -std::log(std::sqrt(coupler_reflectivity[n]));
    l.gamma_prime[n] = -std::log(std::sqrt(end_mirror_reflectivity[n]));
  }
  return l;
}

OperatingPoint OpoConfig::operating_point() const {
  OperatingPoint op;
  op.sigma = sigma;
  op.analysis_frequency_hz = analysis_frequency_hz;
  for (int n = 0; n < kCarriers; ++n) {
    op.detuning_rad_s[n] = detuning_rad_s[n];
    op.fsr_hz[n] = fsr_hz[n];
  }
  return op;
}

PhononParams OpoConfig::phonon_params() const {
  PhononParams pp;
  pp.n_th = n_th;
  if (phonons_enabled)
    for (int n = 0; n < kCarriers; ++n)
      for (int j = 0; j < kCarriers; ++j) pp.g[n][j] = phonon_g[n][j];
  return pp;
}

MirrorSet OpoConfig::mirrors() const { return mirror_set(losses(), debug_transmission_scale); }

OpoConfig reference_config() {
  OpoConfig cfg;
  cfg.coupler_reflectivity = {0.70, 0.96, 0.96};
  cfg.end_mirror_reflectivity = {0.995, 0.995, 0.995};
  cfg.fsr_hz = {4.3e9, 4.3e9, 4.3e9};
  cfg.detuning_rad_s = {0.0, 0.0, 0.0};
  cfg.analysis_frequency_hz = 21e6;
  cfg.sigma = 1.5;
  cfg.phonons_enabled = true;
  cfg.phonon_g[0][0] = 8.0e-3;  // pump    <-> reservoir shared with the idler
  cfg.phonon_g[1][0] = 1.9e-3;  // signal  <-> shared reservoir
  cfg.phonon_g[1][1] = 2.7e-3;  // signal  <-> its own reservoir
  cfg.phonon_g[2][0] = 3.6e-3;  // idler   <-> shared reservoir
  cfg.n_th = 100.0;
  cfg.detection_enabled = false;
  cfg.detection_efficiency = {0.65, 0.87, 0.87};
  cfg.output_format = "csv";
  cfg.threshold_power_mw = 60.0;
  return cfg;
}

void validate_config(const OpoConfig& cfg) {
  for (int n = 0; n < kCarriers; ++n) {
    if (!(cfg.coupler_reflectivity[n] > 0.0 && cfg.coupler_reflectivity[n] <= 1.0))
      throw ConfigError("coupler_reflectivity[" + std::to_string(n) + "] must lie in (0, 1]");
    if (!(cfg.end_mirror_reflectivity[n] > 0.0 && cfg.end_mirror_reflectivity[n] <= 1.0))
      throw ConfigError("end_mirror_reflectivity[" + std::to_string(n) +
                        "] must lie in (0, 1]");
    if (!(cfg.fsr_hz[n] > 0.0))
      throw ConfigError("fsr_hz[" + std::to_string(n) + "] must be positive");
    if (!(cfg.detection_efficiency[n] > 0.0 && cfg.detection_efficiency[n] <= 1.0))
      throw ConfigError("detection.efficiency[" + std::to_string(n) + "] must lie in (0, 1]");
    if (!std::isfinite(cfg.detuning_rad_s[n]))
      throw ConfigError("detuning_rad_s[" + std::to_string(n) + "] must be finite");
    if (std::abs(cfg.analysis_frequency_hz) >= cfg.fsr_hz[n])
      throw ConfigError("analysis_frequency_hz must stay below every fsr_hz entry");
  }
  if (!(cfg.sigma >= 0.0)) throw ConfigError("sigma must be non-negative");
  if (!(cfg.n_th >= 0.0)) throw ConfigError("phonons.n_th must be non-negative");
  for (int n = 0; n < kCarriers; ++n)
    for (int j = 0; j < kCarriers; ++j)
      if (!std::isfinite(cfg.phonon_g[n][j]))
        throw ConfigError("phonons.coupling_g entries must be finite");
  if (cfg.output_format != "csv" && cfg.output_format != "json" &&
      cfg.output_format != "table")
    throw ConfigError("output_format must be one of csv, json, table");
  if (!(cfg.debug_transmission_scale > 0.0))
    throw ConfigError("debug.transmission_scale must be positive");
}

namespace {

void read_triplet(const json& j, const char* key, std::array<double, kCarriers>& out) {
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != kCarriers)
    throw ConfigError(std::string(key) + " must be an array of 3 numbers");
  for (int n = 0; n < kCarriers; ++n) {
    if (!v[n].is_number()) throw ConfigError(std::string(key) + " must contain numbers");
    out[n] = v[n].get<double>();
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& scope) {
  for (const auto& item : j.items())
    if (!known.count(item.key()))
      throw ConfigError("unknown key '" + item.key() + "' in " + scope);
}

}  // namespace

OpoConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  reject_unknown_keys(j,
                      {"coupler_reflectivity", "end_mirror_reflectivity", "fsr_hz",
                       "detuning_rad_s", "analysis_frequency_hz", "sigma", "phonons",
                       "detection", "output_format", "threshold_power_mw", "debug"},
                      "config");

  OpoConfig cfg;
  try {
    read_triplet(j, "coupler_reflectivity", cfg.coupler_reflectivity);
    read_triplet(j, "end_mirror_reflectivity", cfg.end_mirror_reflectivity);
    read_triplet(j, "fsr_hz", cfg.fsr_hz);
    if (j.contains("detuning_rad_s")) read_triplet(j, "detuning_rad_s", cfg.detuning_rad_s);
    cfg.analysis_frequency_hz = j.at("analysis_frequency_hz").get<double>();
    cfg.sigma = j.at("sigma").get<double>();

    if (j.contains("phonons")) {
      const auto& p = j.at("phonons");
      reject_unknown_keys(p, {"enabled", "coupling_g", "n_th"}, "phonons");
      cfg.phonons_enabled = p.value("enabled", false);
      cfg.n_th = p.value("n_th", 0.0);
      if (p.contains("coupling_g")) {
        const auto& g = p.at("coupling_g");
        if (!g.is_array() || g.size() != kCarriers)
          throw ConfigError("phonons.coupling_g must be a 3x3 array");
        for (int n = 0; n < kCarriers; ++n) {
          if (!g[n].is_array() || g[n].size() != kCarriers)
            throw ConfigError("phonons.coupling_g must be a 3x3 array");
          for (int m = 0; m < kCarriers; ++m) cfg.phonon_g[n][m] = g[n][m].get<double>();
        }
      }
    }
    if (j.contains("detection")) {
      const auto& d = j.at("detection");
      reject_unknown_keys(d, {"enabled", "efficiency"}, "detection");
      cfg.detection_enabled = d.value("enabled", false);
      if (d.contains("efficiency")) read_triplet(d, "efficiency", cfg.detection_efficiency);
    }
    if (j.contains("output_format")) cfg.output_format = j.at("output_format").get<std::string>();
    if (j.contains("threshold_power_mw"))
      cfg.threshold_power_mw = j.at("threshold_power_mw").get<double>();
    if (j.contains("debug")) {
      const auto& d = j.at("debug");
      reject_unknown_keys(d, {"transmission_scale"}, "debug");
      cfg.debug_transmission_scale = d.value("transmission_scale", 1.0);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }

  validate_config(cfg);
  return cfg;
}

OpoConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_config(body.str());
}

std::string config_to_json(const OpoConfig& cfg) {
  json j;
  j["coupler_reflectivity"] = cfg.coupler_reflectivity;
  j["end_mirror_reflectivity"] = cfg.end_mirror_reflectivity;
  j["fsr_hz"] = cfg.fsr_hz;
  j["detuning_rad_s"] = cfg.detuning_rad_s;
  j["analysis_frequency_hz"] = cfg.analysis_frequency_hz;
  j["sigma"] = cfg.sigma;
  j["phonons"]["enabled"] = cfg.phonons_enabled;
  j["phonons"]["n_th"] = cfg.n_th;
  for (int n = 0; n < kCarriers; ++n)
    j["phonons"]["coupling_g"].push_back({cfg.phonon_g[n][0], cfg.phonon_g[n][1],
                                          cfg.phonon_g[n][2]});
  j["detection"]["enabled"] = cfg.detection_enabled;
  j["detection"]["efficiency"] = cfg.detection_efficiency;
  j["output_format"] = cfg.output_format;
  if (cfg.threshold_power_mw > 0.0) j["threshold_power_mw"] = cfg.threshold_power_mw;
  if (cfg.debug_transmission_scale != 1.0)
    j["debug"]["transmission_scale"] = cfg.debug_transmission_scale;
  return j.dump(2) + "\n";
}

}  // namespace opo
