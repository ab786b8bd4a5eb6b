#include "suqes/wkbep.hpp"

#include <cmath>
#include <stdexcept>

namespace suqes {

double eval_potential(const PotentialPolynomial& p, double x) {
  const double x2 = x * x;
  return p.vmin + x2 * (p.c2 + x2 * (p.c4 + x2 * p.c6));
}

PotentialPolynomial wkbep_series(const SuqSpectrumParams& p) {
  validate(p);
  const double theta = p.tau * p.N;
  const double s = std::sin(p.tau);
  const double sin_theta = std::sin(theta);
  if (std::fabs(sin_theta) < 1e-12) {
    throw std::invalid_argument(
        "wkbep_series: N*tau at a multiple of pi (degenerate leading term)");
  }
  const double C = std::cos(theta);
  const double K = p.tau * sin_theta / (s * s);
  const double lead = 0.25 * p.A * K * K;  // coefficient of u^2
  const double u2 = 2.0 * p.A;             // u^2 = 2A x^2

  PotentialPolynomial out;
  out.vmin = suq11_vmin(p);
  out.c2 = lead * u2;
  out.c4 = lead * (-2.0 / 3.0) * (p.tau * p.tau * C / (s * s)) * u2 * u2;
  out.c6 = lead * (1.0 / 45.0) *
           (std::pow(p.tau, 4) * (23.0 * C * C - 6.0) / std::pow(s, 4)) * u2 *
           u2 * u2;
  return out;
}

double mpt_closed_form(double x, double vmin, double A, int N) {
  if (!(A > 0.0)) throw std::invalid_argument("mpt_closed_form: A must be > 0");
  const double t = std::tanh(std::sqrt(2.0 * A) * x);
  return vmin + 0.25 * A * static_cast<double>(N) * N * t * t;
}

}  // namespace suqes
