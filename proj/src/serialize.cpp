#include "opo/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace opo {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

const char* axis_label(SweepAxis axis) {
  return axis == SweepAxis::Sigma ? "sigma" : "omega";
}

}  // namespace

std::string to_csv(const RealMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

RealMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ConfigError("matrix_from_csv: bad cell '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ConfigError("matrix_from_csv: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("matrix_from_csv: empty input");
  RealMatrix m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::string pattern_name(const std::string& block, int row, int col) {
  if (block == "vs") {
    if (row > col) std::swap(row, col);
    if (row == col) {
      static const char* diag[6] = {"rho0", "beta0", "rho1", "beta1", "rho2", "beta2"};
      return diag[row];
    }
    if (row == 0 && col == 2) return "mu01";
    if (row == 0 && col == 4) return "mu02";
    if (row == 2 && col == 4) return "zeta12";
    if (row == 1 && col == 3) return "nu01";
    if (row == 1 && col == 5) return "nu02";
    if (row == 3 && col == 5) return "eps12";
    // remaining off-diagonals only appear with photon-phonon coupling
    static const struct { int r, c; const char* n; } cross[] = {
        {0, 1, "e1"}, {0, 3, "e2"}, {0, 5, "e3"}, {1, 2, "e4"}, {1, 4, "e5"},
        {2, 3, "e6"}, {2, 5, "e7"}, {3, 4, "e8"}, {4, 5, "e9"}};
    for (const auto& c : cross)
      if (row == c.r && col == c.c) return c.n;
    return "";
  }
  if (block == "csa") {
    // the cross block is not symmetric: each named correlation sits at two
    // directed positions and its mirror entries carry the partner name
    auto match = [&](int r1, int c1, int r2, int c2) {
      return (row == r1 && col == c1) || (row == r2 && col == c2);
    };
    if (match(2, 1, 0, 3)) return "kappa01";
    if (match(4, 1, 0, 5)) return "kappa02";
    if (match(1, 2, 3, 0)) return "lambda01";
    if (match(1, 4, 5, 0)) return "lambda02";
    if (match(4, 3, 2, 5)) return "varrho12";
    if (match(3, 4, 5, 2)) return "eta12";
    return "";
  }
  return "";
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points, SweepAxis axis) {
  std::string out = "axis,value,block,row,col,name,entry\n";
  const char* axis_name = axis_label(axis);
  for (const auto& p : points) {
    const std::string value = format_double(p.value);
    if (!p.ok) {
      std::string msg = p.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out += std::string(axis_name) + "," + value + ",error,0,0," + msg + ",nan\n";
      continue;
    }
    auto emit = [&](const char* block, const RealMatrix& m) {
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          out += std::string(axis_name) + "," + value + "," + block + "," +
                 std::to_string(i) + "," + std::to_string(j) + "," +
                 pattern_name(block, static_cast<int>(i), static_cast<int>(j)) + "," +
                 format_double(m(i, j)) + "\n";
    };
    emit("freq", p.v);
    emit("vs", p.sa.v_s);
    emit("va", p.sa.v_a);
    emit("csa", p.sa.c_sa);
  }
  return out;
}

std::string sweep_to_json(const std::vector<SweepPoint>& points, SweepAxis axis) {
  nlohmann::json j;
  j["axis"] = axis_label(axis);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json e;
    e["value"] = p.value;
    e["ok"] = p.ok;
    if (!p.ok) {
      e["error"] = p.error;
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index i = 0; i < p.v.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < p.v.cols(); ++k) row.push_back(p.v(i, k));
        rows.push_back(std::move(row));
      }
      e["covariance"] = std::move(rows);
    }
    arr.push_back(std::move(e));
  }
  j["points"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string sweep_to_table(const std::vector<SweepPoint>& points, SweepAxis axis) {
  std::string out = std::string(axis_label(axis)) + "  status  cross-block max  purity\n";
  for (const auto& p : points) {
    char buf[160];
    if (p.ok) {
      const double purity =
          1.0 / std::sqrt(std::max(1.0, Eigen::PartialPivLU<RealMatrix>(p.v).determinant()));
      std::snprintf(buf, sizeof(buf), "%-12.6g ok      %-16.6g %.6g\n", p.value,
                    p.sa.sa_norm(), purity);
      out += buf;
    } else {
      std::snprintf(buf, sizeof(buf), "%-12.6g FAILED  %s\n", p.value, p.error.c_str());
      out += buf;
    }
  }
  return out;
}

namespace {

nlohmann::json matrix_to_json(const RealMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string covariance_json(const OpoConfig& cfg, const CovarianceMatrix& v,
                            const SABlocks& sa, const PhysicalityReport& report) {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(config_to_json(cfg));
  j["covariance"] = matrix_to_json(v);
  j["v_s"] = matrix_to_json(sa.v_s);
  j["v_a"] = matrix_to_json(sa.v_a);
  j["c_sa"] = matrix_to_json(sa.c_sa);
  j["physicality"]["min_uncertainty_eigenvalue"] = report.min_uncertainty_eigenvalue;
  j["physicality"]["purity"] = report.purity;
  nlohmann::json nus = nlohmann::json::array();
  for (Eigen::Index k = 0; k < report.symplectic_eigenvalues.size(); ++k)
    nus.push_back(report.symplectic_eigenvalues(k));
  j["physicality"]["symplectic_eigenvalues"] = std::move(nus);
  return j.dump(2) + "\n";
}

std::string covariance_table(const CovarianceMatrix& v, const SABlocks& sa,
                             const PhysicalityReport& report) {
  std::ostringstream out;
  auto print_block = [&](const char* title, const RealMatrix& m, const char* block) {
    out << title << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " %12.6g", m(i, j));
        out << buf;
      }
      out << "\n";
    }
    if (block && std::string(block) == "vs") {
      out << "  named entries:";
      for (int i = 0; i < 6; ++i)
        out << " " << pattern_name("vs", i, i) << "=" << m(i, i);
      out << "\n";
    }
    out << "\n";
  };
  print_block("symmetric block V_s", sa.v_s, "vs");
  print_block("antisymmetric block V_a", sa.v_a, nullptr);
  print_block("cross block C_s/a", sa.c_sa, nullptr);
  print_block("frequency-basis covariance (12x12)", v, nullptr);
  out << "purity: " << report.purity << "\n";
  out << "min uncertainty eigenvalue: " << report.min_uncertainty_eigenvalue << "\n";
  out << "symplectic eigenvalues:";
  for (Eigen::Index k = 0; k < report.symplectic_eigenvalues.size(); ++k)
    out << " " << report.symplectic_eigenvalues(k);
  out << "\n";
  return out.str();
}

}  // namespace opo
