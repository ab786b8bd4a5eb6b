#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "suqes/qes.hpp"

namespace suqes {

enum class SignB { Positive, Negative };

// Thrown by solve_tau / match when the shape constraint has no sign change
// inside the feasible window for the requested N.
class NoRootInWindow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Open interval of theta = N*tau where a real-parameter match exists.
// Endpoints solve cos^2(theta) = 6/23 and cos^2(theta) = 1/3.
struct Window {
  double lo;
  double hi;
};

Window feasible_window(SignB sign_b);

// Value of 2k+3 implied by (theta, tau):
//   -(3 sqrt(5)/2) sin(theta) (18 cos^2 theta - 6) /
//     (tau (23 cos^2 theta - 6)^(3/2)).
// Rejects 23 cos^2 theta - 6 <= 0.
double k_of_theta_tau(double theta, double tau);

// Root of k_of_theta_tau(N*tau, tau) = 2k+3 with N*tau inside the feasible
// window, found by bisection to |f| < 1e-10. Throws NoRootInWindow when the
// constraint does not change sign across the window interior.
double solve_tau(int N, int k, SignB sign_b);

// A = sqrt(6 sqrt 5) sin^2 tau / (tau^(3/2) sqrt(sin N tau)
//       (23 cos^2 N tau - 6)^(1/4)).
double amplitude_A(double tau, int N);

// b = -sqrt(15 sqrt(5)/2) sqrt(sin N tau) cos(N tau) /
//       (sqrt(tau) (23 cos^2 N tau - 6)^(3/4)); opposite in sign to cos(N tau).
double shape_b(double tau, int N);

// Fully solved correspondence between a quasi-exact spec (a = 1) and the
// SU_q(1,1) WKB-equivalent potential truncated at x^6.
struct MatchSolution {
  QesPotentialSpec spec;      // a = 1, b from shape_b
  int N = 0;
  double tau = 0.0;
  double A = 0.0;
  double E0prime = 0.0;       // V_min = 0 convention
  double theta = 0.0;         // N * tau
  PotentialPolynomial potential;          // from wkbep_series
  std::array<double, 3> residuals{};      // x^2, x^4, x^6 relative residuals

  SuqSpectrumParams spectrum() const {
    return SuqSpectrumParams{E0prime, A, tau, N};
  }
};

MatchSolution match(int n, int r, int N, SignB sign_b);

// All N in [N_min, N_max] for which solve_tau succeeds, ordered by N.
std::vector<MatchSolution> scan_N(int n, int r, SignB sign_b, int N_min,
                                  int N_max);

// Parameter-counting check for the (undeformed) modified Poschl-Teller well:
// its single free amplitude is fixed by the x^6 coefficient, the x^4 one then
// pins b, and the x^2 equation is left violated.
struct MptInfeasibilityReport {
  int k = 0;
  double A = 0.0;            // from the x^6 equation, a = 1
  double b = 0.0;            // from the x^4 equation
  double x4_residual = 0.0;  // relative, zero by construction of b
  double x2_residual = 0.0;  // relative violation of the x^2 equation
  bool sign_conflict = false;  // x^4 coefficient negative while b > 0 needed
  bool feasible = false;
};

MptInfeasibilityReport attempt_mpt_match(int k);

}  // namespace suqes
