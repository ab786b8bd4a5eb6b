#pragma once

#include <vector>

namespace suqes {

// Deformation regime: q = exp(tau) (real) or q = exp(i*tau) (phase).
enum class Regime { RealQ, PhaseQ };

// tau > 0 always; in the phase regime tau < pi so that sin(tau) != 0.
// tau = 0 is rejected: callers wanting the classical value should use the
// plain number instead of taking a 0/0 limit here.
struct DeformationParam {
  Regime regime = Regime::PhaseQ;
  double tau = 0.0;
};

// Throws std::invalid_argument if the parameter is outside its domain.
void validate(const DeformationParam& d);

// [x] = sinh(tau*x)/sinh(tau) for real q, sin(tau*x)/sin(tau) for phase q.
double qnumber(double x, const DeformationParam& d);

struct ClassicalLimitStep {
  double tau;
  double value;      // [x] at this tau
  double deviation;  // |[x] - x|
};

struct ClassicalLimitReport {
  std::vector<ClassicalLimitStep> steps;  // tau decreasing by 10x per step
  double final_deviation = 0.0;
};

// Evaluates [x] along tau, tau/10, tau/100, ... (`steps` entries, starting
// from d.tau) and records the deviation from the undeformed value x.
ClassicalLimitReport classical_limit_check(double x, const DeformationParam& d,
                                           int steps);

}  // namespace suqes
