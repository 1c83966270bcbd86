#include "opo/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace opo {

namespace {

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!m.allFinite()) throw NumericError(std::string(op) + ": non-finite entries");
}

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("expm: matrix must be square");
  if (m.rows() > 64) throw DimensionError("expm: dimension above 64 not supported");
  if (m.size() == 0) throw DimensionError("expm: empty matrix");
  require_finite(m, "expm");

  // Scale so the series argument has 1-norm <= 1/2, then undo by squaring.
  int squarings = 0;
  const double norm = one_norm(m);
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix a = m / std::ldexp(1.0, squarings);

  const Eigen::Index n = m.rows();
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k <= 64; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
    if (one_norm(term) <= eps * one_norm(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  require_finite(sum, "expm");
  return sum;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols()) throw DimensionError("solve: coefficient matrix must be square");
  if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side row count mismatch");
  require_finite(a, "solve");
  require_finite(b, "solve");

  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot < 1e-14) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "solve: numerically singular system (pivot %.3e)", min_pivot);
    throw SingularMatrixError(msg, min_pivot);
  }
  ComplexMatrix x = lu.solve(b);
  require_finite(x, "solve");
  return x;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionError("direct_sum: blocks must be square");
  ComplexMatrix r = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  r.topLeftCorner(a.rows(), a.cols()) = a;
  r.bottomRightCorner(b.rows(), b.cols()) = b;
  return r;
}

}  // namespace opo
