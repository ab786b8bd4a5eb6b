#include "suqes/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "suqes/reference.hpp"

using namespace suqes;

TEST_CASE("deformed harmonic oscillator levels") {
  CHECK(qho_level(0, {1.0, {Regime::RealQ, 0.3}}) == doctest::Approx(0.5));
  CHECK(qho_level(0, {1.0, {Regime::PhaseQ, 0.7}}) == doctest::Approx(0.5));
  // [2] = sin(pi/3)/sin(pi/6) = sqrt(3).
  CHECK(qho_level(1, {1.0, {Regime::PhaseQ, M_PI / 6.0}}) ==
        doctest::Approx(0.5 * (1.0 + std::sqrt(3.0))).epsilon(1e-14));
  CHECK(qho_level(3, {2.0, {Regime::RealQ, 0.1}}) > 7.0);
}

TEST_CASE("real regime stretches, phase regime squeezes") {
  for (int n = 1; n <= 10; ++n) {
    const double classical = n + 0.5;
    CHECK(qho_level(n, {1.0, {Regime::RealQ, 0.3}}) > classical);
    CHECK(qho_level(n, {1.0, {Regime::PhaseQ, 0.3}}) < classical);
  }
}

TEST_CASE("deformed anharmonic spectrum reproduces the worked cases") {
  const auto p1 = reference::n1_positive.spectrum();
  CHECK(std::fabs(suq11_level(0, p1) - 12.3805) < 5e-3);
  CHECK(std::fabs(suq11_level(2, p1) - 63.0584) < 5e-3);

  const auto p9 = reference::n9_positive.spectrum();
  CHECK(std::fabs(suq11_level(0, p9) - 20.3991) < 5e-3);
  CHECK(std::fabs(suq11_level(18, p9) - 800.118) < 5e-3);
}

TEST_CASE("small-angle limit matches the undeformed quadratic form") {
  const SuqSpectrumParams p{100.0, 2.0, 1e-7, 30};
  for (int n = 0; n <= n_max(p); ++n) {
    const double limit =
        p.E0prime - p.A * (n - 0.5 * p.N) * (n + 1.0 - 0.5 * p.N);
    CHECK(suq11_level(n, p) ==
          doctest::Approx(limit).epsilon(1e-6));
  }
}

TEST_CASE("index bound and monotonicity") {
  const auto p = reference::n1_positive.spectrum();
  CHECK(n_max(p) == 75);
  CHECK_THROWS_AS(suq11_level(n_max(p) + 1, p), std::invalid_argument);
  CHECK_THROWS_AS(suq11_level(-1, p), std::invalid_argument);

  const double vmin = suq11_vmin(p);
  double prev = suq11_level(0, p);
  CHECK(prev - vmin >= 0.0);
  for (int n = 1; n <= n_max(p); ++n) {
    const double cur = suq11_level(n, p);
    CHECK(cur > prev);
    CHECK(cur - vmin >= 0.0);
    prev = cur;
  }
}

TEST_CASE("potential minimum offset") {
  // E0' built from the inversion puts the minimum at zero.
  const double E0 = e0prime_for_zero_vmin(0.7, 0.02, 40);
  CHECK(suq11_vmin({E0, 0.7, 0.02, 40}) == doctest::Approx(0.0).epsilon(1e-12));

  // The published n=1 offset was chosen the same way, at the roughly
  // four-significant-digit precision of the published parameters.
  CHECK(std::fabs(suq11_vmin(reference::n1_positive.spectrum())) < 2e-2);

  // Small-angle limit: (cos tau - cos N tau)/(2 sin^2 tau) -> (N^2 - 1)/4.
  CHECK(suq11_vmin({0.0, 1.0, 1e-5, 10}) ==
        doctest::Approx(-24.75).epsilon(1e-6));
}

TEST_CASE("spectrum parameter validation") {
  CHECK_THROWS_AS(suq11_level(0, {0.0, -1.0, 0.01, 10}), std::invalid_argument);
  CHECK_THROWS_AS(suq11_level(0, {0.0, 1.0, 0.0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(suq11_level(0, {0.0, 1.0, 0.01, 1}), std::invalid_argument);
}
