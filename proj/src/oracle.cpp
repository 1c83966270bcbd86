#include "opo/oracle.hpp"

#include <cmath>

namespace opo {

ComplexMatrix rk4_gain(const ComplexMatrix& m, int steps) {
  if (m.rows() != m.cols()) throw DimensionError("rk4_gain: matrix must be square");
  if (steps < 1) throw NumericError("rk4_gain: need at least one step");
  const double h = 1.0 / steps;
  ComplexMatrix a = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = m * a;
    const ComplexMatrix k2 = m * (a + (h / 2.0) * k1);
    const ComplexMatrix k3 = m * (a + (h / 2.0) * k2);
    const ComplexMatrix k4 = m * (a + h * k3);
    a += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return a;
}

Complex scalar_fabry_perot(double gamma, double gamma_prime, double phi) {
  const double r = std::exp(-gamma);
  const double rp = std::exp(-gamma_prime);
  const double t2 = 1.0 - r * r;
  const Complex loop = r * rp * std::exp(Complex(0.0, -2.0 * phi));
  const Complex denom = 1.0 - loop;
  if (std::abs(denom) < 1e-14)
    throw OscillationBoundaryError("scalar_fabry_perot: cavity at oscillation");
  return r - t2 * rp * std::exp(Complex(0.0, -2.0 * phi)) / denom;
}

CovarianceMatrix frequency_basis_covariance(const OpoConfig& cfg) {
  validate_config(cfg);
  const CavityLosses losses = cfg.losses();
  const OperatingPoint op = cfg.operating_point();
  const MeanFields mf = mean_fields(op, losses);
  const MirrorSet mirrors = mirror_set(losses, cfg.debug_transmission_scale);
  const PhaseMatrix pm = phase_matrix(op);
  const ComplexMatrix e = phase_factor(pm);

  RealMatrix v;
  if (!cfg.phonons_enabled) {
    const ComplexMatrix g = gain_matrix_full(mf);
    const ScatterResult s =
        scatter(mirrors.R, mirrors.T, mirrors.R_prime, mirrors.T_prime, e, g);
    const ComplexMatrix n = quadrature_map(kOpticalSlots);
    const ComplexMatrix n_inv = quadrature_map_inverse(kOpticalSlots);
    const ComplexMatrix rq = n * s.reflection * n_inv;
    const ComplexMatrix tq = n * s.transmission * n_inv;
    v = (rq * rq.adjoint() + tq * tq.adjoint()).real();
  } else {
    const PhononParams pp = cfg.phonon_params();
    const ComplexMatrix g = extended_gain(mf, pp);
    const ScatterResult s = extended_scattering(mirrors, pm, g);
    const ComplexMatrix n = quadrature_map(kExtendedSlots);
    const ComplexMatrix n_inv = quadrature_map_inverse(kExtendedSlots);
    const ComplexMatrix rq = n * s.reflection * n_inv;
    const ComplexMatrix tq = n * s.transmission * n_inv;
    ComplexMatrix both(kExtendedSlots, 2 * kExtendedSlots);
    both.leftCols(kExtendedSlots) = rq;
    both.rightCols(kExtendedSlots) = tq;
    const ComplexMatrix v18 =
        both * thermal_input_covariance(pp).cast<Complex>() * both.adjoint();
    v = v18.topLeftCorner(kOpticalSlots, kOpticalSlots).real();
  }
  return ((v + v.transpose()) / 2.0).eval();
}

OracleReport dual_basis_check(const OpoConfig& cfg) {
  OracleReport rep;
  rep.name = "dual basis agreement";
  rep.tolerance = 1e-10;
  const CovarianceMatrix primary = output_covariance(cfg);
  const CovarianceMatrix cross = frequency_basis_covariance(cfg);
  rep.max_abs_error = (primary - cross).cwiseAbs().maxCoeff();
  rep.passed = rep.max_abs_error <= rep.tolerance;
  return rep;
}

}  // namespace opo
