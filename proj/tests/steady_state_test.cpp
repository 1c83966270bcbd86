#include "opo/steady_state.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace opo;

TEST_CASE("threshold strength at the reference losses") {
  CHECK(std::abs(threshold_strength(test::reference_losses()) - 1.2256518467083213e-05) <
        1e-16);
}

TEST_CASE("threshold strength scales cubically for small uniform losses") {
  auto uniform = [](double g) {
    CavityLosses l;
    for (int n = 0; n < kCarriers; ++n) l.gamma[n] = g;
    return l;
  };
  const double ratio = threshold_strength(uniform(2e-5)) / threshold_strength(uniform(1e-5));
  CHECK(ratio == doctest::Approx(8.0).epsilon(1e-3));
}

TEST_CASE("mean fields at the reference operating point") {
  const MeanFields mf = mean_fields(test::reference_point(1.5), test::reference_losses());
  CHECK(std::abs(mf.chi_alpha[0] - 0.011590943168786283) < 1e-15);
  CHECK(std::abs(mf.chi_alpha[1] - 0.016068365862075263) < 1e-15);
  CHECK(std::abs(mf.chi_alpha[2] - 0.016068365862075263) < 1e-15);

  const MeanFields higher =
      mean_fields(test::reference_point(1.75), test::reference_losses());
  CHECK(std::abs(higher.chi_alpha[1] - 0.019259476007465425) < 1e-15);
}

TEST_CASE("downconverted fields vanish exactly at threshold") {
  const MeanFields mf = mean_fields(test::reference_point(1.0), test::reference_losses());
  CHECK(mf.chi_alpha[1] == Complex(0.0));
  CHECK(mf.chi_alpha[2] == Complex(0.0));
  CHECK(std::abs(mf.chi_alpha[0]) > 0.0);
}

TEST_CASE("pump amplitude clamps above threshold") {
  const CavityLosses losses = test::reference_losses();
  const MeanFields a = mean_fields(test::reference_point(1.3), losses);
  const MeanFields b = mean_fields(test::reference_point(3.7), losses);
  CHECK(a.chi_alpha[0] == b.chi_alpha[0]);
  CHECK(a.phonon_ref == b.phonon_ref);
  // the reference amplitude is the clamped pump itself
  CHECK(a.phonon_ref == std::abs(a.chi_alpha[0]));
}

TEST_CASE("reference amplitude is the clamp even below threshold") {
  const CavityLosses losses = test::reference_losses();
  const MeanFields below = mean_fields(test::reference_point(0.3), losses);
  const MeanFields above = mean_fields(test::reference_point(2.0), losses);
  CHECK(below.phonon_ref == above.phonon_ref);
}

TEST_CASE("downconverted intensity grows as sqrt(sigma) - 1") {
  const CavityLosses losses = test::reference_losses();
  const double i_lo = std::norm(mean_fields(test::reference_point(2.25), losses).chi_alpha[1]);
  const double i_hi = std::norm(mean_fields(test::reference_point(4.0), losses).chi_alpha[1]);
  CHECK(std::abs(i_hi / i_lo - 2.0) < 1e-12);  // (sqrt(4)-1)/(sqrt(2.25)-1) = 2
}

TEST_CASE("unequal infrared losses split the signal and idler amplitudes") {
  CavityLosses losses = test::reference_losses();
  losses.gamma[2] = 2.0 * losses.gamma[1];
  const MeanFields mf = mean_fields(test::reference_point(2.0), losses);
  const double expected = std::sqrt((std::exp(losses.total(2)) - 1.0) /
                                    (std::exp(losses.total(1)) - 1.0));
  CHECK(std::abs(mf.chi_alpha[1]) / std::abs(mf.chi_alpha[2]) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("below threshold the pump intensity is linear in pump power") {
  const CavityLosses losses = test::reference_losses();
  const double clamp =
      std::abs(mean_fields(test::reference_point(1.0), losses).chi_alpha[0]);
  const MeanFields mf = mean_fields(test::reference_point(0.49), losses);
  CHECK(std::abs(mf.chi_alpha[0]) == doctest::Approx(0.7 * clamp).epsilon(1e-12));
  CHECK(mf.chi_alpha[1] == Complex(0.0));
}

TEST_CASE("degenerate cavities are rejected") {
  CavityLosses lossless;  // all zeros
  CHECK_THROWS_AS(threshold_strength(lossless), DegenerateCavityError);

  CavityLosses no_pump_coupler = test::reference_losses();
  no_pump_coupler.gamma[0] = 0.0;
  CHECK_THROWS_AS(threshold_strength(no_pump_coupler), DegenerateCavityError);

  CavityLosses negative = test::reference_losses();
  negative.gamma_prime[1] = -0.01;
  CHECK_THROWS_AS(threshold_strength(negative), ConfigError);

  CHECK_THROWS_AS(mean_fields(test::reference_point(-0.5), test::reference_losses()),
                  ConfigError);
}
