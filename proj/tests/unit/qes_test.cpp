#include "suqes/qes.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

using namespace suqes;

namespace {

// Characteristic polynomial coefficients (monic, descending powers) of the
// tridiagonal sector matrix via the three-term determinant recurrence:
//   p_j(E) = (E - d_j) p_{j-1}(E) - super_{j-1} sub_{j-1} p_{j-2}(E).
std::vector<double> characteristic_polynomial(const QesMatrix& M) {
  std::vector<double> prev{1.0};  // p_{-1}
  std::vector<double> cur{1.0, -M.diag[0]};
  for (int j = 1; j < M.dim(); ++j) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (size_t i = 0; i < cur.size(); ++i) {
      next[i] += cur[i];                     // E * p_{j-1}
      next[i + 1] -= M.diag[j] * cur[i];     // -d_j p_{j-1}
    }
    const double w = M.super[j - 1] * M.sub[j - 1];
    for (size_t i = 0; i < prev.size(); ++i) {
      next[i + 2] -= w * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double sixth_order_second_derivative(const QesEigenfunction& psi, double x,
                                     double h) {
  // 7-point, O(h^6) central second derivative.
  return (2.0 * psi.value(x - 3 * h) - 27.0 * psi.value(x - 2 * h) +
          270.0 * psi.value(x - h) - 490.0 * psi.value(x) +
          270.0 * psi.value(x + h) - 27.0 * psi.value(x + 2 * h) +
          2.0 * psi.value(x + 3 * h)) /
         (180.0 * h * h);
}

}  // namespace

TEST_CASE("potential coefficients from the spec") {
  const PotentialPolynomial p = qes_to_polynomial({1.0, 12.589097, 1, 0});
  CHECK(std::fabs(p.c2 - 302.97) < 0.01);
  CHECK(p.c4 == doctest::Approx(100.712776).epsilon(1e-9));
  CHECK(p.c6 == doctest::Approx(8.0));

  const PotentialPolynomial harmonic = qes_to_polynomial({0.0, 1.0, 0, 0});
  CHECK(harmonic.c2 == doctest::Approx(2.0));
  CHECK(harmonic.c4 == doctest::Approx(0.0));
  CHECK(harmonic.c6 == doctest::Approx(0.0));

  const PotentialPolynomial dw = qes_to_polynomial({1.0, -12.108743, 1, 0});
  CHECK(dw.c4 == doctest::Approx(-96.869944).epsilon(1e-6));
  CHECK(dw.c4 < 0.0);
}

TEST_CASE("sector matrix closed forms") {
  const QesMatrix M = qes_matrix({1.0, 3.5, 1, 0});
  REQUIRE(M.dim() == 2);
  CHECK(M.diag[0] == doctest::Approx(3.5));
  CHECK(M.diag[1] == doctest::Approx(5.0 * 3.5));
  CHECK(M.super[0] == doctest::Approx(-1.0));
  CHECK(M.sub[0] == doctest::Approx(-8.0));

  for (const double b : {12.589097, 3.5, -12.108743}) {
    const auto levels = qes_levels({1.0, b, 1, 0});
    const double split = 2.0 * std::sqrt(b * b + 2.0);
    CHECK(levels[0] == doctest::Approx(3.0 * b - split).epsilon(1e-12));
    CHECK(levels[1] == doctest::Approx(3.0 * b + split).epsilon(1e-12));
  }

  // 1x1 sector: single level E = b.
  CHECK(qes_levels({1.0, 4.2, 0, 0})[0] == doctest::Approx(4.2));
}

TEST_CASE("n=3 characteristic polynomial matches the quartic closed form") {
  const double b = 18.469158;
  const auto cp = characteristic_polynomial(qes_matrix({1.0, b, 3, 0}));
  REQUIRE(cp.size() == 5);
  CHECK(cp[0] == doctest::Approx(1.0));
  CHECK(cp[1] == doctest::Approx(-28.0 * b).epsilon(1e-9));
  CHECK(cp[2] == doctest::Approx(254.0 * b * b - 240.0).epsilon(1e-9));
  CHECK(cp[3] ==
        doctest::Approx(-812.0 * b * b * b + 2592.0 * b).epsilon(1e-9));
  CHECK(cp[4] ==
        doctest::Approx(585.0 * std::pow(b, 4) - 4656.0 * b * b + 2880.0)
            .epsilon(1e-9));
}

TEST_CASE("worked quasi-exact levels") {
  const auto n1 = qes_levels({1.0, 12.589097, 1, 0});
  CHECK(std::fabs(n1[0] - 12.4307) < 1e-3);
  CHECK(std::fabs(n1[1] - 63.1039) < 1e-3);
  CHECK(std::fabs((n1[1] - n1[0]) - 50.6731) < 2e-3);

  const auto n3 = qes_levels({1.0, 18.469158, 3, 0});
  const double expected3[] = {18.1429, 91.3783, 165.913, 241.703};
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(n3[i] - expected3[i]) < 1e-2);

  const auto dw = qes_levels({1.0, -12.108743, 1, 0});
  CHECK(std::fabs(dw[0] - (-60.7083)) < 1e-3);
  CHECK(std::fabs(dw[1] - (-11.9441)) < 1e-3);
}

TEST_CASE("trace identity and realness for random shapes") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> b_dist(-30.0, 30.0);
  std::uniform_int_distribution<int> n_dist(0, 12);
  std::uniform_int_distribution<int> r_dist(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const QesPotentialSpec s{1.0, b_dist(rng), n_dist(rng), r_dist(rng)};
    const auto levels = qes_levels(s);
    REQUIRE(static_cast<int>(levels.size()) == s.n + 1);
    double sum = 0.0;
    for (double e : levels) {
      CHECK(std::isfinite(e));  // all real by symmetrizability
      sum += e;
    }
    const double expected = s.b * (s.n + 1.0) * (2.0 * s.n + 2.0 * s.r + 1.0);
    const double scale = std::max(1.0, std::fabs(expected));
    CHECK(std::fabs(sum - expected) / scale < 1e-9);
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
      CHECK(levels[i] <= levels[i + 1]);
    }
  }
}

TEST_CASE("eigenfunctions solve the differential equation") {
  const QesPotentialSpec s{1.0, 12.589097, 1, 0};
  const PotentialPolynomial V = qes_to_polynomial(s);
  for (int level = 0; level <= 1; ++level) {
    const QesEigenfunction psi = qes_eigenfunction(s, level);
    for (const double x : {0.1, 0.5, 1.0}) {
      const double h_psi =
          -0.5 * sixth_order_second_derivative(psi, x, 1e-3) +
          eval_potential(V, x) * psi.value(x);
      const double residual =
          std::fabs(h_psi - psi.energy * psi.value(x)) / std::fabs(psi.value(x));
      CHECK(residual < 1e-8);
    }
  }
}

TEST_CASE("node count of the polynomial factor equals the level index") {
  const QesPotentialSpec s{1.0, 6.0, 4, 0};
  for (int level = 0; level <= s.n; ++level) {
    const QesEigenfunction psi = qes_eigenfunction(s, level);
    int sign_changes = 0;
    double prev = psi.value(1e-4);
    for (double x = 1e-4; x <= 4.0; x += 1e-3) {
      const double cur = psi.value(x);
      if (prev != 0.0 && cur != 0.0 && (prev > 0) != (cur > 0)) ++sign_changes;
      if (cur != 0.0) prev = cur;
    }
    CHECK(sign_changes == level);
  }
}

TEST_CASE("ground sector eigenfunction is the bare weight") {
  const QesEigenfunction psi = qes_eigenfunction({1.0, 2.0, 0, 1}, 0);
  REQUIRE(psi.coeffs.size() == 1);
  CHECK(psi.coeffs[0] == doctest::Approx(1.0));
  CHECK(psi.value(0.5) ==
        doctest::Approx(0.5 * std::exp(-0.0625 - 2.0 * 0.25)).epsilon(1e-12));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(qes_levels({-1.0, 1.0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(qes_levels({1.0, 1.0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(qes_eigenfunction({0.0, 1.0, 1, 0}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(qes_eigenfunction({1.0, 1.0, 1, 0}, 5),
                  std::invalid_argument);
}
