#include "suqes/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace suqes {

double qho_level(int n, const QhoParams& p) {
  if (n < 0) throw std::invalid_argument("qho_level: n must be >= 0");
  if (!(p.omega > 0.0)) throw std::invalid_argument("qho_level: omega <= 0");
  return 0.5 * p.omega * (qnumber(n, p.d) + qnumber(n + 1, p.d));
}

void validate(const SuqSpectrumParams& p) {
  if (!(p.A > 0.0)) throw std::invalid_argument("suq11: A must be > 0");
  if (!(p.tau > 0.0) || !(p.tau < M_PI)) {
    throw std::invalid_argument("suq11: tau must lie in (0, pi)");
  }
  if (p.N < 2) throw std::invalid_argument("suq11: N must be >= 2");
}

int n_max(const SuqSpectrumParams& p) {
  validate(p);
  return p.N % 2 == 0 ? p.N / 2 : (p.N - 1) / 2;
}

double suq11_level(int n, const SuqSpectrumParams& p) {
  validate(p);
  if (n < 0 || n > n_max(p)) {
    throw std::invalid_argument("suq11_level: index beyond dissociation bound");
  }
  const double half_N = 0.5 * p.N;
  const double s = std::sin(p.tau);
  return p.E0prime -
         p.A * std::sin(p.tau * (n - half_N)) *
             std::sin(p.tau * (n + 1.0 - half_N)) / (s * s);
}

double suq11_vmin(const SuqSpectrumParams& p) {
  validate(p);
  const double s = std::sin(p.tau);
  return p.E0prime -
         p.A * (std::cos(p.tau) - std::cos(p.tau * p.N)) / (2.0 * s * s);
}

double e0prime_for_zero_vmin(double A, double tau, int N) {
  const double s = std::sin(tau);
  return A * (std::cos(tau) - std::cos(tau * N)) / (2.0 * s * s);
}

}  // namespace suqes
