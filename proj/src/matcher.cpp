#include "suqes/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace suqes {

namespace {

constexpr double kWindowMargin = 1e-9;  // endpoints are open and singular
constexpr double kRootTolerance = 1e-10;

double relative_diff(double lhs, double rhs) {
  const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
  return std::fabs(lhs - rhs) / scale;
}

}  // namespace

Window feasible_window(SignB sign_b) {
  const double edge_623 = std::acos(std::sqrt(6.0 / 23.0));  // cos^2 = 6/23
  const double edge_13 = std::acos(1.0 / std::sqrt(3.0));    // cos^2 = 1/3
  if (sign_b == SignB::Positive) {
    // cos(theta) < 0: second quadrant.
    return {M_PI - edge_623, M_PI - edge_13};
  }
  return {edge_13, edge_623};
}

double k_of_theta_tau(double theta, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("k_of_theta_tau: tau <= 0");
  const double c2 = std::cos(theta) * std::cos(theta);
  const double D = 23.0 * c2 - 6.0;
  if (!(D > 0.0)) {
    throw std::invalid_argument("k_of_theta_tau: 23 cos^2(theta) - 6 <= 0");
  }
  return -(1.5 * std::sqrt(5.0)) * std::sin(theta) * (18.0 * c2 - 6.0) /
         (tau * std::pow(D, 1.5));
}

double solve_tau(int N, int k, SignB sign_b) {
  if (N < 1) throw std::invalid_argument("solve_tau: N must be >= 1");
  if (k < 0) throw std::invalid_argument("solve_tau: k must be >= 0");
  const Window w = feasible_window(sign_b);
  const double target = 2.0 * k + 3.0;

  const auto f = [&](double theta) {
    return k_of_theta_tau(theta, theta / N) - target;
  };

  double lo = w.lo + kWindowMargin;
  double hi = w.hi - kWindowMargin;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo / N;
  if (fhi == 0.0) return hi / N;
  if (flo * fhi > 0.0) {
    throw NoRootInWindow("solve_tau: constraint has no sign change in window");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid / N;  // interval exhausted
    const double fmid = f(mid);
    if (std::fabs(fmid) < kRootTolerance) return mid / N;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  throw std::runtime_error("solve_tau: bisection did not converge");
}

double amplitude_A(double tau, int N) {
  if (!(tau > 0.0)) throw std::invalid_argument("amplitude_A: tau <= 0");
  const double theta = tau * N;
  const double s_theta = std::sin(theta);
  const double D = 23.0 * std::cos(theta) * std::cos(theta) - 6.0;
  if (!(s_theta > 0.0) || !(D > 0.0)) {
    throw std::invalid_argument("amplitude_A: (tau, N) infeasible");
  }
  const double s = std::sin(tau);
  return std::sqrt(6.0 * std::sqrt(5.0)) * s * s /
         (std::pow(tau, 1.5) * std::sqrt(s_theta) * std::pow(D, 0.25));
}

double shape_b(double tau, int N) {
  if (!(tau > 0.0)) throw std::invalid_argument("shape_b: tau <= 0");
  const double theta = tau * N;
  const double s_theta = std::sin(theta);
  const double c_theta = std::cos(theta);
  const double D = 23.0 * c_theta * c_theta - 6.0;
  if (!(s_theta > 0.0) || !(D > 0.0)) {
    throw std::invalid_argument("shape_b: (tau, N) infeasible");
  }
  return -std::sqrt(7.5 * std::sqrt(5.0)) * std::sqrt(s_theta) * c_theta /
         (std::sqrt(tau) * std::pow(D, 0.75));
}

MatchSolution match(int n, int r, int N, SignB sign_b) {
  if (n < 0 || (r != 0 && r != 1)) {
    throw std::invalid_argument("match: need n >= 0 and r in {0, 1}");
  }
  const int k = 2 * n + r;
  MatchSolution sol;
  sol.N = N;
  sol.tau = solve_tau(N, k, sign_b);
  sol.theta = sol.tau * N;
  sol.A = amplitude_A(sol.tau, N);
  sol.E0prime = e0prime_for_zero_vmin(sol.A, sol.tau, N);
  sol.spec = QesPotentialSpec{1.0, shape_b(sol.tau, N), n, r};
  sol.potential = wkbep_series(sol.spectrum());
  sol.potential.vmin = 0.0;  // matched outputs use the V_min = 0 convention

  const PotentialPolynomial qes_side = qes_to_polynomial(sol.spec);
  sol.residuals = {relative_diff(qes_side.c2, sol.potential.c2),
                   relative_diff(qes_side.c4, sol.potential.c4),
                   relative_diff(qes_side.c6, sol.potential.c6)};
  return sol;
}

std::vector<MatchSolution> scan_N(int n, int r, SignB sign_b, int N_min,
                                  int N_max) {
  if (N_min > N_max) throw std::invalid_argument("scan_N: empty range");
  std::vector<MatchSolution> out;
  for (int N = N_min; N <= N_max; ++N) {
    try {
      out.push_back(match(n, r, N, sign_b));
    } catch (const NoRootInWindow&) {
      // skip this N
    }
  }
  return out;
}

MptInfeasibilityReport attempt_mpt_match(int k) {
  if (k < 0) throw std::invalid_argument("attempt_mpt_match: k must be >= 0");
  MptInfeasibilityReport rep;
  rep.k = k;

  // Undeformed tanh^2 well in u = sqrt(2A) x:
  //   c2 = A^2/2, c4 = (A/4)(2A)^2 (-2/3), c6 = (A/4)(2A)^3 (17/45).
  // x^6 equation (a = 1): 8 = (34/45) A^4.
  rep.A = std::pow(360.0 / 34.0, 0.25);
  const double c4 = 0.25 * rep.A * 4.0 * rep.A * rep.A * mpt_u2_ratio;
  const double c2 = 0.5 * rep.A * rep.A;

  // x^4 equation: 8 b = c4.
  rep.b = c4 / 8.0;
  rep.x4_residual = 0.0;
  rep.sign_conflict = c4 < 0.0;  // a sextic single well needs c4 = 8b > 0

  // x^2 equation: 2 (b^2 - (2k+3)) vs c2.
  const double lhs = 2.0 * (rep.b * rep.b - (2.0 * k + 3.0));
  rep.x2_residual = relative_diff(lhs, c2);
  rep.feasible = rep.x2_residual < 0.10 && rep.x4_residual < 0.10;
  return rep;
}

}  // namespace suqes
