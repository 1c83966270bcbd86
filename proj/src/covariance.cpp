#include "opo/covariance.hpp"

#include <cmath>

namespace opo {

namespace {

// Conjugation by the (involutive) S/A basis change, written blockwise with
// half-sums so that structurally equal blocks cancel exactly. The
// quadrature-space image of the basis change coincides with the operator
// one because its 6x6 identity blocks commute with the per-pair map N.
RealMatrix conjugate_by_lambda(const RealMatrix& v) {
  const Eigen::Index h = v.rows() / 2;
  const RealMatrix a = v.topLeftCorner(h, h);
  const RealMatrix b = v.topRightCorner(h, h);
  const RealMatrix c = v.bottomLeftCorner(h, h);
  const RealMatrix d = v.bottomRightCorner(h, h);
  RealMatrix r(v.rows(), v.cols());
  r.topLeftCorner(h, h) = ((a + b) + (c + d)) / 2.0;
  r.topRightCorner(h, h) = ((a - b) + (c - d)) / 2.0;
  r.bottomLeftCorner(h, h) = ((a + b) - (c + d)) / 2.0;
  r.bottomRightCorner(h, h) = ((a - b) - (c - d)) / 2.0;
  return r;
}

// S/A-basis representation of a frequency-diagonal matrix with per-slot
// diagonals dp (+Omega block) and dm (-Omega block).
ComplexMatrix sa_of_sideband_diagonal(const Eigen::VectorXcd& dp, const Eigen::VectorXcd& dm) {
  const Eigen::Index h = dp.size();
  ComplexMatrix m = ComplexMatrix::Zero(2 * h, 2 * h);
  for (Eigen::Index i = 0; i < h; ++i) {
    const Complex half_sum = (dp(i) + dm(i)) / 2.0;
    const Complex half_diff = (dp(i) - dm(i)) / 2.0;
    m(i, i) = half_sum;
    m(i + h, i + h) = half_sum;
    m(i, i + h) = half_diff;
    m(i + h, i) = half_diff;
  }
  return m;
}

RealMatrix real_part_checked(const ComplexMatrix& m, const char* what) {
  const double imag_residue = m.imag().cwiseAbs().maxCoeff();
  if (imag_residue > 1e-9)
    throw NumericError(std::string(what) + ": quadrature map produced imaginary residue " +
                       std::to_string(imag_residue));
  return m.real();
}

void require_physical(const CovarianceMatrix& v) {
  const Eigen::Index n = v.rows();
  ComplexMatrix h = v.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw PhysicalityError("output covariance violates the uncertainty condition (min eig " +
                           std::to_string(es.eigenvalues().minCoeff()) + ")");
}

// Full chain in the S/A basis. Mirror matrices are diagonal with equal
// sideband blocks, so their S/A representation is the matrix itself; the
// phase matrix is the only piece that acquires S/A off-blocks. With
// symmetrize set, the -Omega phases are bit-copies of the +Omega ones and
// every matrix in the chain stays exactly block diagonal, which is what
// makes the no-coupling counterfactual exact.
CovarianceMatrix sa_pipeline(const OperatingPoint& op, const CavityLosses& losses,
                             const PhononParams& pp, bool symmetrize,
                             double transmission_scale) {
  const MeanFields mf = mean_fields(op, losses);
  const MirrorSet mirrors = mirror_set(losses, transmission_scale);

  PhaseMatrix pm = phase_matrix(op);
  if (symmetrize) pm.phi.bottomRightCorner(6, 6) = pm.phi.topLeftCorner(6, 6);
  const ComplexMatrix e12 = phase_factor(pm);
  const ComplexMatrix e_sa =
      sa_of_sideband_diagonal(e12.diagonal().head(6), e12.diagonal().tail(6));

  const ComplexMatrix g_sa = direct_sum(gain_matrix_sa(BasisSign::S, mf),
                                        gain_matrix_sa(BasisSign::A, mf));

  bool with_phonons = false;
  for (int n = 0; n < kCarriers && !with_phonons; ++n)
    for (int j = 0; j < kCarriers && !with_phonons; ++j)
      if (pp.g[n][j] != 0.0) with_phonons = true;

  CovarianceMatrix v_sa;
  if (!with_phonons) {
    const ScatterResult s =
        scatter(mirrors.R, mirrors.T, mirrors.R_prime, mirrors.T_prime, e_sa, g_sa);
    const ComplexMatrix n = quadrature_map(kOpticalSlots);
    const ComplexMatrix n_inv = quadrature_map_inverse(kOpticalSlots);
    const RealMatrix r = real_part_checked(n * s.reflection * n_inv, "reflection");
    const RealMatrix t = real_part_checked(n * s.transmission * n_inv, "transmission");
    v_sa = r * r.transpose() + t * t.transpose();
  } else {
    // extended drift rotated to the S/A basis: optical block from the S/A
    // drifts directly, optomech blocks conjugated by the basis change
    const ComplexMatrix l = lambda_transform();
    const OptomechBlocks b = optomech_blocks(pp, mf);
    const Complex i(0.0, 1.0);
    ComplexMatrix m_sa = ComplexMatrix::Zero(kExtendedSlots, kExtendedSlots);
    m_sa.topLeftCorner(kOpticalSlots, kOpticalSlots) = direct_sum(
        drift_matrix_sa(BasisSign::S, mf), drift_matrix_sa(BasisSign::A, mf));
    m_sa.topRightCorner(kOpticalSlots, kPhononSlots) = i * (l * b.J);
    m_sa.bottomLeftCorner(kPhononSlots, kOpticalSlots) = i * (b.K * l);
    const ComplexMatrix g18 = expm(m_sa);

    ComplexMatrix e18 = ComplexMatrix::Identity(kExtendedSlots, kExtendedSlots);
    e18.topLeftCorner(kOpticalSlots, kOpticalSlots) = e_sa;
    const ScatterResult s =
        scatter(lift_mirror(mirrors.R, 0.0), lift_mirror(mirrors.T, 1.0),
                lift_mirror(mirrors.R_prime, 0.0), lift_mirror(mirrors.T_prime, 1.0), e18,
                g18);
    const ComplexMatrix n = quadrature_map(kExtendedSlots);
    const ComplexMatrix n_inv = quadrature_map_inverse(kExtendedSlots);
    const RealMatrix r = real_part_checked(n * s.reflection * n_inv, "reflection");
    const RealMatrix t = real_part_checked(n * s.transmission * n_inv, "transmission");
    RealMatrix v_in = RealMatrix::Identity(kExtendedSlots, kExtendedSlots);
    for (int k = kOpticalSlots; k < kExtendedSlots; ++k) v_in(k, k) = 1.0 + 2.0 * pp.n_th;
    const RealMatrix v18 = r * v_in * r.transpose() + t * v_in * t.transpose();
    // phonon slots traced out: exact for Gaussian marginals
    v_sa = v18.topLeftCorner(kOpticalSlots, kOpticalSlots);
  }

  CovarianceMatrix v = conjugate_by_lambda(v_sa);
  v = ((v + v.transpose()) / 2.0).eval();
  require_physical(v);
  return v;
}

}  // namespace

ComplexMatrix quadrature_map(int slots) {
  if (slots % 2 != 0) throw DimensionError("quadrature_map: slot count must be even");
  ComplexMatrix n = ComplexMatrix::Zero(slots, slots);
  for (int k = 0; k + 1 < slots; k += 2) {
    n(k, k) = 1.0;
    n(k, k + 1) = 1.0;
    n(k + 1, k) = Complex(0.0, -1.0);
    n(k + 1, k + 1) = Complex(0.0, 1.0);
  }
  return n;
}

ComplexMatrix quadrature_map_inverse(int slots) {
  if (slots % 2 != 0) throw DimensionError("quadrature_map_inverse: slot count must be even");
  ComplexMatrix n = ComplexMatrix::Zero(slots, slots);
  for (int k = 0; k + 1 < slots; k += 2) {
    n(k, k) = 0.5;
    n(k, k + 1) = Complex(0.0, 0.5);
    n(k + 1, k) = 0.5;
    n(k + 1, k + 1) = Complex(0.0, -0.5);
  }
  return n;
}

CovarianceMatrix output_covariance(const OpoConfig& cfg) {
  validate_config(cfg);
  const PhononParams pp = cfg.phonon_params();
  return sa_pipeline(cfg.operating_point(), cfg.losses(), pp, false,
                     cfg.debug_transmission_scale);
}

CovarianceMatrix output_covariance(const OperatingPoint& op, const CavityLosses& losses,
                                   const PhononParams& pp) {
  return sa_pipeline(op, losses, pp, false, 1.0);
}

CovarianceMatrix output_covariance_symmetrized(const OperatingPoint& op,
                                               const CavityLosses& losses,
                                               const PhononParams& pp) {
  return sa_pipeline(op, losses, pp, true, 1.0);
}

SABlocks to_sa_blocks(const CovarianceMatrix& v) {
  if (v.rows() != kOpticalSlots || v.cols() != kOpticalSlots)
    throw DimensionError("to_sa_blocks: expected a 12x12 frequency-basis covariance");
  const RealMatrix w = conjugate_by_lambda(v);
  SABlocks b;
  b.v_s = w.topLeftCorner(6, 6);
  b.v_a = w.bottomRightCorner(6, 6);
  b.c_sa = w.topRightCorner(6, 6);
  return b;
}

CovarianceMatrix from_sa_blocks(const SABlocks& blocks) {
  RealMatrix w(kOpticalSlots, kOpticalSlots);
  w.topLeftCorner(6, 6) = blocks.v_s;
  w.topRightCorner(6, 6) = blocks.c_sa;
  w.bottomLeftCorner(6, 6) = blocks.c_sa.transpose();
  w.bottomRightCorner(6, 6) = blocks.v_a;
  return conjugate_by_lambda(w);
}

CovarianceMatrix apply_detection(const CovarianceMatrix& v,
                                 const std::array<double, kCarriers>& eta) {
  if (v.rows() != kOpticalSlots || v.cols() != kOpticalSlots)
    throw DimensionError("apply_detection: expected a 12x12 optical covariance");
  for (int n = 0; n < kCarriers; ++n)
    if (!(eta[n] > 0.0 && eta[n] <= 1.0))
      throw ConfigError("detection efficiency must lie in (0, 1]");

  RealVector e(kOpticalSlots);
  for (int block = 0; block < 2; ++block)
    for (int n = 0; n < kCarriers; ++n) {
      e(slot(block, n, false)) = eta[n];
      e(slot(block, n, true)) = eta[n];
    }
  const RealVector root = e.cwiseSqrt();
  RealMatrix out = root.asDiagonal() * v * root.asDiagonal();
  out += (RealVector::Ones(kOpticalSlots) - e).asDiagonal();
  return out;
}

PhysicalityReport physicality_report(const CovarianceMatrix& v) {
  if (v.rows() != v.cols()) throw DimensionError("physicality_report: matrix must be square");
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw DimensionError("physicality_report: input is not symmetric");

  const Eigen::Index n = v.rows();
  PhysicalityReport rep;

  ComplexMatrix h = v.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  rep.min_uncertainty_eigenvalue = es.eigenvalues().minCoeff();

  // symplectic spectrum: |eig(i Omega V)| comes in equal +- pairs
  ComplexMatrix iwv = Complex(0.0, 1.0) * symplectic_form(n).cast<Complex>() * v.cast<Complex>();
  Eigen::ComplexEigenSolver<ComplexMatrix> ces(iwv);
  RealVector all = ces.eigenvalues().cwiseAbs();
  std::sort(all.begin(), all.end());
  rep.symplectic_eigenvalues = RealVector(n / 2);
  for (Eigen::Index k = 0; k < n / 2; ++k)
    rep.symplectic_eigenvalues(k) = (all(2 * k) + all(2 * k + 1)) / 2.0;

  const double det = Eigen::PartialPivLU<RealMatrix>(v).determinant();
  rep.purity = (det > 0.0) ? std::min(1.0, 1.0 / std::sqrt(det)) : 0.0;
  return rep;
}

}  // namespace opo
