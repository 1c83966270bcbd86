#include "opo/config.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <fstream>

using namespace opo;

TEST_CASE("reference configuration carries the published cavity") {
  const OpoConfig cfg = reference_config();
  CHECK(cfg.coupler_reflectivity[0] == 0.70);
  CHECK(cfg.coupler_reflectivity[1] == 0.96);
  CHECK(cfg.end_mirror_reflectivity[2] == 0.995);
  CHECK(cfg.fsr_hz[0] == 4.3e9);
  CHECK(cfg.analysis_frequency_hz == 21e6);
  CHECK(cfg.sigma == 1.5);
  CHECK(cfg.phonons_enabled);
  CHECK(cfg.phonon_g[0][0] == 8.0e-3);
  CHECK(cfg.phonon_g[1][0] == 1.9e-3);
  CHECK(cfg.phonon_g[1][1] == 2.7e-3);
  CHECK(cfg.phonon_g[2][0] == 3.6e-3);
  CHECK(cfg.n_th == 100.0);
  CHECK_FALSE(cfg.detection_enabled);
  CHECK(cfg.detection_efficiency[0] == 0.65);
  CHECK(cfg.detection_efficiency[1] == 0.87);

  const CavityLosses l = cfg.losses();
  CHECK(l.gamma[0] == doctest::Approx(0.17833747196936617).epsilon(1e-14));
  CHECK(l.gamma[1] == doctest::Approx(0.020410997260127607).epsilon(1e-14));
  CHECK(l.gamma_prime[0] == doctest::Approx(0.0025062709117721852).epsilon(1e-14));
}

TEST_CASE("phonon parameters honor the enable switch") {
  OpoConfig cfg = reference_config();
  cfg.phonons_enabled = false;
  const PhononParams off = cfg.phonon_params();
  for (int n = 0; n < kCarriers; ++n)
    for (int j = 0; j < kCarriers; ++j) CHECK(off.g[n][j] == 0.0);
  cfg.phonons_enabled = true;
  CHECK(cfg.phonon_params().g[0][0] == 8.0e-3);
}

TEST_CASE("JSON round trip preserves every field") {
  OpoConfig cfg = reference_config();
  cfg.sigma = 1.25;
  cfg.detuning_rad_s[1] = 3.5e5;
  cfg.detection_enabled = true;
  cfg.output_format = "json";
  const OpoConfig back = parse_config(config_to_json(cfg));
  CHECK(back.sigma == cfg.sigma);
  CHECK(back.detuning_rad_s[1] == cfg.detuning_rad_s[1]);
  CHECK(back.detection_enabled == cfg.detection_enabled);
  CHECK(back.output_format == "json");
  CHECK(back.n_th == cfg.n_th);
  for (int n = 0; n < kCarriers; ++n) {
    CHECK(back.coupler_reflectivity[n] == cfg.coupler_reflectivity[n]);
    CHECK(back.detection_efficiency[n] == cfg.detection_efficiency[n]);
    for (int j = 0; j < kCarriers; ++j) CHECK(back.phonon_g[n][j] == cfg.phonon_g[n][j]);
  }
}

TEST_CASE("shipped configuration files load") {
  const OpoConfig ref = load_config(std::string(OPO_CONFIG_DIR) + "/reference.json");
  CHECK(ref.sigma == 1.5);
  CHECK(ref.phonons_enabled);
  CHECK(ref.n_th == 100.0);
  CHECK(ref.threshold_power_mw == 60.0);

  const OpoConfig control =
      load_config(std::string(OPO_CONFIG_DIR) + "/negative_control.json");
  CHECK(control.debug_transmission_scale == 1.02);
}

TEST_CASE("validation rejects out-of-range fields") {
  auto broken = [](auto&& mutate) {
    OpoConfig cfg = reference_config();
    mutate(cfg);
    return cfg;
  };
  CHECK_THROWS_AS(validate_config(broken([](OpoConfig& c) { c.sigma = -0.1; })),
                  ConfigError);
  CHECK_THROWS_AS(
      validate_config(broken([](OpoConfig& c) { c.coupler_reflectivity[0] = 0.0; })),
      ConfigError);
  CHECK_THROWS_AS(
      validate_config(broken([](OpoConfig& c) { c.end_mirror_reflectivity[1] = 1.2; })),
      ConfigError);
  CHECK_THROWS_AS(validate_config(broken([](OpoConfig& c) { c.fsr_hz[2] = -1.0; })),
                  ConfigError);
  CHECK_THROWS_AS(
      validate_config(broken([](OpoConfig& c) { c.analysis_frequency_hz = 5e9; })),
      ConfigError);
  CHECK_THROWS_AS(validate_config(broken([](OpoConfig& c) { c.n_th = -2.0; })),
                  ConfigError);
  CHECK_THROWS_AS(validate_config(broken([](OpoConfig& c) { c.output_format = "xml"; })),
                  ConfigError);
  CHECK_THROWS_AS(
      validate_config(broken([](OpoConfig& c) { c.detection_efficiency[0] = 0.0; })),
      ConfigError);
  CHECK_THROWS_AS(
      validate_config(broken([](OpoConfig& c) { c.debug_transmission_scale = 0.0; })),
      ConfigError);
}

TEST_CASE("parser rejects malformed and unknown input") {
  CHECK_THROWS_AS(parse_config("not json at all"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2, 3]"), ConfigError);

  const std::string base = config_to_json(reference_config());
  // unknown top-level key
  std::string bad = base;
  bad.insert(bad.find('{') + 1, "\"surprise\": 1,");
  CHECK_THROWS_AS(parse_config(bad), ConfigError);

  CHECK_THROWS_AS(parse_config(R"({
    "coupler_reflectivity": [0.7, 0.96, 0.96],
    "end_mirror_reflectivity": [0.995, 0.995, 0.995],
    "fsr_hz": [4.3e9, 4.3e9, 4.3e9],
    "analysis_frequency_hz": 21e6,
    "sigma": 1.5,
    "phonons": {"enabled": true, "warp": 9}
  })"),
                  ConfigError);

  CHECK_THROWS_AS(parse_config(R"({
    "coupler_reflectivity": [0.7, 0.96],
    "end_mirror_reflectivity": [0.995, 0.995, 0.995],
    "fsr_hz": [4.3e9, 4.3e9, 4.3e9],
    "analysis_frequency_hz": 21e6,
    "sigma": 1.5
  })"),
                  ConfigError);

  CHECK_THROWS_AS(parse_config(R"({
    "coupler_reflectivity": [0.7, 0.96, 0.96],
    "end_mirror_reflectivity": [0.995, 0.995, 0.995],
    "fsr_hz": [4.3e9, 4.3e9, 4.3e9],
    "analysis_frequency_hz": 21e6,
    "sigma": 1.5,
    "phonons": {"coupling_g": [[1, 2], [3, 4]]}
  })"),
                  ConfigError);

  CHECK_THROWS_AS(load_config("/nonexistent/path/config.json"), ConfigError);
}
