#include "opo/serialize.hpp"
#include "opo/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct Options {
  std::string config_path;
  std::string output_dir = ".";
  std::string format;
  std::string phonons;
  std::string detection;
  std::string axis = "sigma";
  std::string grid;
};

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON configuration file (defaults built in)");
  cmd->add_option("--format", o.format, "Output format: csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  cmd->add_option("--phonons", o.phonons, "Override photon-phonon coupling: on or off")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--detection", o.detection, "Override detection efficiency: on or off")
      ->check(CLI::IsMember({"on", "off"}));
}

opo::OpoConfig resolve_config(const Options& o) {
  opo::OpoConfig cfg =
      o.config_path.empty() ? opo::reference_config() : opo::load_config(o.config_path);
  if (!o.format.empty()) cfg.output_format = o.format;
  if (!o.phonons.empty()) cfg.phonons_enabled = (o.phonons == "on");
  if (!o.detection.empty()) cfg.detection_enabled = (o.detection == "on");
  opo::validate_config(cfg);
  return cfg;
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw opo::ConfigError("cannot create output directory '" + dir + "'");
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw opo::ConfigError("cannot write '" + path + "'");
  std::cout << "wrote " << path << "\n";
}

int run_covariance(const Options& o) {
  const opo::OpoConfig cfg = resolve_config(o);
  opo::CovarianceMatrix v = opo::output_covariance(cfg);
  if (cfg.detection_enabled) v = opo::apply_detection(v, cfg.detection_efficiency);
  const opo::SABlocks sa = opo::to_sa_blocks(v);
  const opo::PhysicalityReport report = opo::physicality_report(v);

  if (cfg.output_format == "csv") {
    write_file(o.output_dir, "covariance.csv", opo::to_csv(v));
    write_file(o.output_dir, "vs.csv", opo::to_csv(sa.v_s));
    write_file(o.output_dir, "va.csv", opo::to_csv(sa.v_a));
    write_file(o.output_dir, "csa.csv", opo::to_csv(sa.c_sa));
    std::string phys = "min_uncertainty_eigenvalue,purity";
    for (int k = 0; k < report.symplectic_eigenvalues.size(); ++k)
      phys += ",nu" + std::to_string(k + 1);
    phys += "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", report.min_uncertainty_eigenvalue);
    phys += buf;
    std::snprintf(buf, sizeof(buf), ",%.17g", report.purity);
    phys += buf;
    for (int k = 0; k < report.symplectic_eigenvalues.size(); ++k) {
      std::snprintf(buf, sizeof(buf), ",%.17g", report.symplectic_eigenvalues(k));
      phys += buf;
    }
    phys += "\n";
    write_file(o.output_dir, "physicality.csv", phys);
  } else if (cfg.output_format == "json") {
    write_file(o.output_dir, "covariance.json", opo::covariance_json(cfg, v, sa, report));
  } else {
    write_file(o.output_dir, "covariance.txt", opo::covariance_table(v, sa, report));
  }
  std::printf("purity %.6g, min uncertainty eigenvalue %.6g\n", report.purity,
              report.min_uncertainty_eigenvalue);
  return 0;
}

int run_sweep(const Options& o) {
  const opo::OpoConfig cfg = resolve_config(o);
  const opo::Grid grid = opo::parse_grid(o.grid);
  opo::SweepAxis axis;
  if (o.axis == "sigma")
    axis = opo::SweepAxis::Sigma;
  else if (o.axis == "omega")
    axis = opo::SweepAxis::Omega;
  else
    throw opo::ConfigError("axis must be sigma or omega, got '" + o.axis + "'");

  const std::vector<opo::SweepPoint> points = opo::run_sweep(cfg, axis, grid);
  int failures = 0;
  for (const auto& p : points)
    if (!p.ok) ++failures;

  if (cfg.output_format == "csv")
    write_file(o.output_dir, "sweep.csv", opo::sweep_to_csv(points, axis));
  else if (cfg.output_format == "json")
    write_file(o.output_dir, "sweep.json", opo::sweep_to_json(points, axis));
  else
    write_file(o.output_dir, "sweep.txt", opo::sweep_to_table(points, axis));

  std::printf("%d points, %d failed\n", grid.count, failures);
  return 0;
}

int run_validate(const Options& o) {
  const opo::OpoConfig cfg = resolve_config(o);
  const std::vector<opo::OracleReport> reports = opo::run_validation(cfg);
  for (const auto& r : reports)
    std::printf("%s  %-42s measured %-12.4g limit %.4g\n", r.passed ? "[ ok ]" : "[FAIL]",
                r.name.c_str(), r.max_abs_error, r.tolerance);
  if (!opo::all_passed(reports)) {
    std::printf("validation FAILED\n");
    return 1;
  }
  std::printf("all checks passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Six-mode optical parametric oscillator covariance calculator"};
  app.require_subcommand(1);

  Options cov_opts, sweep_opts, val_opts;

  CLI::App* cov = app.add_subcommand("covariance", "Covariance matrices at one point");
  add_common_options(cov, cov_opts);
  cov->add_option("--output", cov_opts.output_dir, "Output directory");

  CLI::App* swp = app.add_subcommand("sweep", "Sweep sigma or analysis frequency");
  add_common_options(swp, sweep_opts);
  swp->add_option("--output", sweep_opts.output_dir, "Output directory");
  swp->add_option("--axis", sweep_opts.axis, "Swept parameter: sigma or omega")
      ->check(CLI::IsMember({"sigma", "omega"}));
  swp->add_option("--grid", sweep_opts.grid, "Grid as start:stop:count")->required();

  CLI::App* val = app.add_subcommand("validate", "Run the consistency suite");
  add_common_options(val, val_opts);

  try {
    app.parse(argc, argv);
    if (cov->parsed()) return run_covariance(cov_opts);
    if (swp->parsed()) return run_sweep(sweep_opts);
    return run_validate(val_opts);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const opo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const opo::OscillationBoundaryError& e) {
    std::cerr << "physics boundary: " << e.what() << "\n";
    return 3;
  } catch (const opo::DegenerateCavityError& e) {
    std::cerr << "physics boundary: " << e.what() << "\n";
    return 3;
  } catch (const opo::PhysicalityError& e) {
    std::cerr << "physics boundary: " << e.what() << "\n";
    return 3;
  } catch (const opo::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
