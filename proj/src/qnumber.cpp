#include "suqes/qnumber.hpp"

#include <cmath>
#include <stdexcept>

namespace suqes {

void validate(const DeformationParam& d) {
  if (!(d.tau > 0.0)) {
    throw std::invalid_argument("deformation: tau must be > 0");
  }
  if (d.regime == Regime::PhaseQ && !(d.tau < M_PI)) {
    throw std::invalid_argument("deformation: phase regime needs tau < pi");
  }
}

double qnumber(double x, const DeformationParam& d) {
  validate(d);
  if (d.regime == Regime::RealQ) {
    return std::sinh(d.tau * x) / std::sinh(d.tau);
  }
  return std::sin(d.tau * x) / std::sin(d.tau);
}

ClassicalLimitReport classical_limit_check(double x, const DeformationParam& d,
                                           int steps) {
  validate(d);
  if (steps < 1) {
    throw std::invalid_argument("classical_limit_check: steps must be >= 1");
  }
  ClassicalLimitReport report;
  report.steps.reserve(steps);
  DeformationParam probe = d;
  for (int i = 0; i < steps; ++i) {
    const double value = qnumber(x, probe);
    report.steps.push_back({probe.tau, value, std::fabs(value - x)});
    probe.tau /= 10.0;
  }
  report.final_deviation = report.steps.back().deviation;
  return report;
}

}  // namespace suqes
