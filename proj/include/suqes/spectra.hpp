#pragma once

#include "suqes/qnumber.hpp"

namespace suqes {

// q-deformed harmonic oscillator, hbar = 1.
struct QhoParams {
  double omega = 1.0;  // > 0
  DeformationParam d;
};

// E(n) = (omega/2) ([n] + [n+1]).
double qho_level(int n, const QhoParams& p);

// SU_q(1,1) anharmonic oscillator spectrum (phase regime only):
//   E_n = E0' - A sin(tau(n - N/2)) sin(tau(n + 1 - N/2)) / sin^2(tau).
struct SuqSpectrumParams {
  double E0prime = 0.0;
  double A = 0.0;    // > 0
  double tau = 0.0;  // > 0, < pi
  int N = 0;         // >= 2, band parameter
};

void validate(const SuqSpectrumParams& p);

// Largest valid level index: N = 2*n_max or N = 2*n_max + 1.
int n_max(const SuqSpectrumParams& p);

// Level n of the deformed spectrum; n must lie in [0, n_max].
double suq11_level(int n, const SuqSpectrumParams& p);

// Potential minimum V_min = E0' - A (cos(tau) - cos(tau*N)) / (2 sin^2 tau).
double suq11_vmin(const SuqSpectrumParams& p);

// E0' that puts the potential minimum at zero for given (A, tau, N).
double e0prime_for_zero_vmin(double A, double tau, int N);

}  // namespace suqes
