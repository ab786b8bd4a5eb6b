#pragma once

#include "suqes/spectra.hpp"

namespace suqes {

// Even sextic polynomial V(x) = vmin + c2 x^2 + c4 x^4 + c6 x^6 (hbar = m = 1).
// Common currency between the WKB-equivalent construction, the quasi-exactly
// soluble family and the numerical bound-state solver.
struct PotentialPolynomial {
  double vmin = 0.0;
  double c2 = 0.0;
  double c4 = 0.0;
  double c6 = 0.0;
};

double eval_potential(const PotentialPolynomial& p, double x);

// WKB-equivalent potential of the SU_q(1,1) oscillator, truncated at x^6.
// The series variable is u = sqrt(2A) x; with K = tau sin(N tau)/sin^2 tau
// and C = cos(N tau):
//   c2 = (A/4) K^2 (2A)
//   c4 = (A/4) K^2 (-2/3)(tau^2 C / sin^2 tau) (2A)^2
//   c6 = (A/4) K^2 (1/45)(tau^4 (23 C^2 - 6) / sin^4 tau) (2A)^3
// vmin is taken from suq11_vmin(p). Rejects N*tau at a multiple of pi.
PotentialPolynomial wkbep_series(const SuqSpectrumParams& p);

// Modified Poschl-Teller well, V(x) = vmin + (A N^2 / 4) tanh^2(sqrt(2A) x).
double mpt_closed_form(double x, double vmin, double A, int N);

// Bracket coefficients of the tanh^2 Taylor series in u = sqrt(2A) x:
// V = vmin + (A/4) u^2 [1 + mpt_u2_ratio u^2 + mpt_u4_ratio u^4 + ...].
inline constexpr double mpt_u2_ratio = -2.0 / 3.0;
inline constexpr double mpt_u4_ratio = 17.0 / 45.0;
inline constexpr double mpt_u6_ratio = -62.0 / 315.0;

}  // namespace suqes
