#include "suqes/qnumber.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace suqes;

TEST_CASE("q-number exact anchor values") {
  const DeformationParam real_q{Regime::RealQ, std::log(2.0)};
  const DeformationParam phase_q{Regime::PhaseQ, M_PI / 6.0};

  CHECK(qnumber(0.0, real_q) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(qnumber(0.0, phase_q) == doctest::Approx(0.0).epsilon(1e-15));
  // [2] = q + 1/q = 2.5 at q = 2.
  CHECK(qnumber(2.0, real_q) == doctest::Approx(2.5).epsilon(1e-14));
  // [3] = sin(pi/2)/sin(pi/6) = 2.
  CHECK(qnumber(3.0, phase_q) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("q-number normalization and antisymmetry") {
  for (const Regime regime : {Regime::RealQ, Regime::PhaseQ}) {
    for (const double tau : {1e-4, 0.1, 0.7, 2.0}) {
      if (regime == Regime::PhaseQ && tau >= M_PI) continue;
      const DeformationParam d{regime, tau};
      CHECK(qnumber(1.0, d) == doctest::Approx(1.0).epsilon(1e-15));
      for (const double x : {0.3, 1.7, 4.0, 9.5}) {
        CHECK(qnumber(-x, d) ==
              doctest::Approx(-qnumber(x, d)).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("real regime is monotone on the nonnegative axis") {
  const DeformationParam d{Regime::RealQ, 0.4};
  double prev = qnumber(0.0, d);
  for (double x = 0.25; x <= 8.0; x += 0.25) {
    const double cur = qnumber(x, d);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("regimes agree for small deformation") {
  const double tau = 1e-5;
  for (double x = -20.0; x <= 20.0; x += 2.5) {
    const double real_val = qnumber(x, {Regime::RealQ, tau});
    const double phase_val = qnumber(x, {Regime::PhaseQ, tau});
    // Leading-order difference is tau^2 (x^3 - x)/3.
    const double bound =
        1.01 * tau * tau * std::fabs(x * x * x - x) / 3.0 + 1e-12;
    CHECK(std::fabs(real_val - phase_val) < bound);
  }
}

TEST_CASE("classical limit convergence") {
  const auto rep = classical_limit_check(5.0, {Regime::PhaseQ, 1e-2}, 3);
  REQUIRE(rep.steps.size() == 3);
  CHECK(rep.steps[0].deviation > rep.steps[1].deviation);
  CHECK(rep.steps[1].deviation > rep.steps[2].deviation);
  CHECK(rep.final_deviation < 1e-6);

  // [1] = 1 at every deformation.
  const auto unit = classical_limit_check(1.0, {Regime::RealQ, 0.5}, 4);
  for (const auto& s : unit.steps) CHECK(s.deviation < 1e-14);

  // Leading deviation is (tau^2/6)(x^3 - x); at tau = 1e-4 and x = 7.5 the
  // bound is (1e-8/6)(421.875 - 7.5) ~ 6.9e-7.
  const auto big = classical_limit_check(7.5, {Regime::RealQ, 1e-2}, 3);
  CHECK(big.steps[2].tau == doctest::Approx(1e-4));
  CHECK(big.steps[2].deviation < 1e-6);
}

TEST_CASE("deformation parameter validation") {
  CHECK_THROWS_AS(qnumber(1.0, {Regime::RealQ, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(qnumber(1.0, {Regime::PhaseQ, -0.2}), std::invalid_argument);
  CHECK_THROWS_AS(qnumber(1.0, {Regime::PhaseQ, M_PI}), std::invalid_argument);
  CHECK_NOTHROW(qnumber(1.0, {Regime::RealQ, 5.0}));  // real regime: any tau>0
}
