#include "opo/sideband.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace opo;
using test::max_abs;

TEST_CASE("zero mean fields give zero drift and unit gain") {
  const MeanFields mf;
  CHECK(max_abs(drift_matrix_sa(BasisSign::S, mf)) == 0.0);
  CHECK(max_abs(gain_matrix_sa(BasisSign::A, mf) - ComplexMatrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("drift entries follow the three-wave coupling pattern") {
  MeanFields mf;
  mf.chi_alpha[0] = Complex(0.11, -0.05);
  mf.chi_alpha[1] = Complex(0.02, 0.07);
  mf.chi_alpha[2] = Complex(-0.04, 0.03);
  const Complex a0 = mf.chi_alpha[0], a1 = mf.chi_alpha[1], a2 = mf.chi_alpha[2];

  for (BasisSign sign : {BasisSign::S, BasisSign::A}) {
    const double s = (sign == BasisSign::S) ? 1.0 : -1.0;
    const ComplexMatrix m = drift_matrix_sa(sign, mf);
    // pump rows: beam-splitter exchange, no sign flip between S and A
    CHECK(m(0, 2) == -a2);
    CHECK(m(0, 4) == -a1);
    CHECK(m(1, 3) == -std::conj(a2));
    CHECK(m(1, 5) == -std::conj(a1));
    CHECK(m(2, 0) == std::conj(a2));
    CHECK(m(3, 1) == a2);
    CHECK(m(4, 0) == std::conj(a1));
    CHECK(m(5, 1) == a1);
    // squeezing entries carry the basis sign
    CHECK(m(2, 5) == s * a0);
    CHECK(m(3, 4) == s * std::conj(a0));
    CHECK(m(4, 3) == s * a0);
    CHECK(m(5, 2) == s * std::conj(a0));
    // everything else vanishes
    int nonzeros = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (m(i, j) != Complex(0.0)) ++nonzeros;
    CHECK(nonzeros == 12);
  }
}

TEST_CASE("pump sign flip swaps the S and A drifts") {
  test::Rng rng(11);
  MeanFields mf = rng.fields(0.2);
  MeanFields flipped = mf;
  flipped.chi_alpha[0] = -mf.chi_alpha[0];
  CHECK(max_abs(drift_matrix_sa(BasisSign::S, mf) -
                drift_matrix_sa(BasisSign::A, flipped)) == 0.0);
}

TEST_CASE("clamped pump alone acts as a two-mode squeezer") {
  MeanFields mf;
  const double x = 0.37;
  mf.chi_alpha[0] = x;
  const ComplexMatrix gs = gain_matrix_sa(BasisSign::S, mf);
  const ComplexMatrix ga = gain_matrix_sa(BasisSign::A, mf);
  const double ch = std::cosh(x), sh = std::sinh(x);
  // signal annihilation mixes with idler creation and vice versa
  CHECK(std::abs(gs(2, 2) - ch) < 1e-13);
  CHECK(std::abs(gs(2, 5) - sh) < 1e-13);
  CHECK(std::abs(gs(5, 2) - sh) < 1e-13);
  CHECK(std::abs(gs(3, 4) - sh) < 1e-13);
  CHECK(std::abs(ga(2, 5) + sh) < 1e-13);
  // the pump block stays passive
  CHECK(std::abs(gs(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(gs(0, 2)) == 0.0);
}

TEST_CASE("gain preserves the commutator metric") {
  test::Rng rng(12);
  const ComplexMatrix k6 = commutator_metric(6).cast<Complex>();
  const ComplexMatrix k12 = commutator_metric(12).cast<Complex>();
  for (int rep = 0; rep < 20; ++rep) {
    const MeanFields mf = rng.fields(0.3);
    const ComplexMatrix gs = gain_matrix_sa(BasisSign::S, mf);
    CHECK(max_abs(gs * k6 * gs.adjoint() - k6) < 1e-12);
    const ComplexMatrix gf = gain_matrix_full(mf);
    CHECK(max_abs(gf * k12 * gf.adjoint() - k12) < 1e-12);
  }
}

TEST_CASE("the basis change is a real orthogonal involution") {
  const ComplexMatrix l = lambda_transform();
  CHECK(max_abs(l.imag().cast<Complex>()) == 0.0);
  CHECK(max_abs(l - l.transpose()) == 0.0);
  CHECK(max_abs(l * l - ComplexMatrix::Identity(12, 12)) < 1e-15);
}

TEST_CASE("exponentiation commutes with the basis change") {
  test::Rng rng(13);
  const MeanFields mf = rng.fields(0.3);
  CHECK(max_abs(expm(drift_matrix_full(mf)) - gain_matrix_full(mf)) < 1e-12);
}

TEST_CASE("squeezing pairs +Omega signal with -Omega idler") {
  MeanFields mf;
  mf.chi_alpha[0] = 0.5;
  const ComplexMatrix g = gain_matrix_full(mf);
  // cross-block pairing is the only squeezing channel
  CHECK(std::abs(g(slot(0, 1, false), slot(1, 2, true))) > 0.01);
  CHECK(std::abs(g(slot(0, 1, false), slot(0, 2, true))) < 1e-14);
}
