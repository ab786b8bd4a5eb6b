#include "suqes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suqes/reference.hpp"
#include "suqes/tridiag.hpp"

namespace suqes {

namespace {

constexpr double kDegeneracyGap = 1e-6;

bool is_integral_ratio(double num, double den) {
  const double ratio = num / den;
  return std::fabs(ratio - std::round(ratio)) < 1e-9 * std::max(1.0, ratio);
}

}  // namespace

void validate(const GridSpec& g) {
  if (!(g.half_width > 0.0)) {
    throw std::invalid_argument("grid: half_width must be > 0");
  }
  if (!(g.step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
  if (g.count < 1) throw std::invalid_argument("grid: count must be >= 1");
  if (!is_integral_ratio(g.half_width, g.step)) {
    throw std::invalid_argument(
        "grid: half_width/step must be integral (odd symmetric point count)");
  }
}

GridSpec auto_grid(const PotentialPolynomial& poly, int count, double step,
                   double margin) {
  if (count < 1) throw std::invalid_argument("auto_grid: count must be >= 1");
  // Crude top-level estimate: harmonic spacing for the quadratic part, at
  // least one unit per level. Steep tails make overestimates cheap.
  const double omega = std::sqrt(2.0 * std::max(poly.c2, 0.5));
  const double top = poly.vmin + std::max(1.0, count * std::max(omega, 1.0));
  const double target = margin * std::fabs(top);

  // Walk outward so local dips of double wells cannot truncate the domain.
  double reach = 1.0;
  while (reach < 64.0) {
    if (eval_potential(poly, reach) >= target &&
        eval_potential(poly, 0.75 * reach) >= target) {
      break;
    }
    reach *= 1.25;
  }
  const double L = std::ceil(reach / step) * step;
  return GridSpec{L, step, count};
}

LevelReport solve_bound_states(const PotentialPolynomial& poly,
                               const GridSpec& g) {
  validate(g);
  const long half = std::lround(g.half_width / g.step);
  const long n = 2 * half - 1;  // interior points, x = 0 at index half-1
  if (n < g.count) throw std::invalid_argument("grid: too few points");

  std::vector<double> diag(n);
  const double inv_h2 = 1.0 / (g.step * g.step);
  for (long i = 0; i < n; ++i) {
    const double x = -g.half_width + (i + 1) * g.step;
    diag[i] = inv_h2 + eval_potential(poly, x);
  }
  std::vector<double> off(n - 1, -0.5 * inv_h2);

  auto eig = symmetric_tridiagonal_eigen(std::move(diag), std::move(off), 0,
                                         g.count - 1, true);

  LevelReport report;
  report.grid = g;
  report.energies = eig.values;
  report.convergence_estimate.assign(g.count, 0.0);
  report.parities.reserve(g.count);
  for (const auto& v : eig.vectors) {
    double sym = 0.0, anti = 0.0;
    for (long i = 0; i < n; ++i) {
      const double mirrored = v[n - 1 - i];
      sym += 0.25 * (v[i] + mirrored) * (v[i] + mirrored);
      anti += 0.25 * (v[i] - mirrored) * (v[i] - mirrored);
    }
    const double total = sym + anti;
    if (sym >= 0.99 * total) {
      report.parities.push_back(Parity::Even);
    } else if (anti >= 0.99 * total) {
      report.parities.push_back(Parity::Odd);
    } else {
      report.parities.push_back(Parity::Unclassified);
    }
  }
  for (int i = 0; i + 1 < g.count; ++i) {
    if (report.energies[i + 1] - report.energies[i] < kDegeneracyGap) {
      report.near_degenerate = true;
    }
  }
  return report;
}

LevelReport refine(const PotentialPolynomial& poly, const GridSpec& g,
                   double tolerance) {
  const LevelReport coarse = solve_bound_states(poly, g);
  GridSpec fine_grid = g;
  fine_grid.step = 0.5 * g.step;
  const LevelReport fine = solve_bound_states(poly, fine_grid);

  LevelReport out = fine;
  for (int i = 0; i < g.count; ++i) {
    const double change = std::fabs(fine.energies[i] - coarse.energies[i]);
    out.convergence_estimate[i] = change;
    if (change > tolerance) {
      throw GridTooCoarse("refine: level change between h and h/2 above tolerance");
    }
    // Central differences are O(h^2): E = (4 E(h/2) - E(h)) / 3.
    out.energies[i] = (4.0 * fine.energies[i] - coarse.energies[i]) / 3.0;
  }
  return out;
}

FailureDemoReport failure_demo() {
  const reference::MatchedCase& c = reference::n1_negative;
  FailureDemoReport rep;
  rep.potential = qes_to_polynomial(c.qes());
  rep.qes_levels = qes_levels(c.qes());
  rep.suq_levels = {suq11_level(0, c.spectrum()), suq11_level(2, c.spectrum())};

  const GridSpec grid{4.0, 2e-3, 6};
  const LevelReport levels = refine(rep.potential, grid);
  rep.oracle_levels = levels.energies;

  // Side-well pairs are numerically degenerate; compare against the lowest
  // member of each pair (indices 0 and 2).
  rep.ground_gap = std::fabs(rep.suq_levels[0] - rep.oracle_levels[0]);
  const double second_gap = std::fabs(rep.suq_levels[1] - rep.oracle_levels[2]);
  const bool qes_agrees =
      std::fabs(rep.qes_levels[0] - rep.oracle_levels[0]) < 1e-2 &&
      std::fabs(rep.qes_levels[1] - rep.oracle_levels[2]) < 1e-2;
  rep.discrepancy_detected =
      qes_agrees && rep.ground_gap > 20.0 && second_gap > 20.0;
  return rep;
}

}  // namespace suqes
