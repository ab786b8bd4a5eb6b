#pragma once

#include <vector>

#include "suqes/matcher.hpp"
#include "suqes/wkbep.hpp"

namespace suqes {

enum class Parity { Even, Odd, Unclassified };

// Symmetric grid [-L, L] including x = 0; half_width/step must be integral so
// the total point count is odd.
struct GridSpec {
  double half_width = 0.0;
  double step = 1e-3;
  int count = 1;  // number of eigenvalues requested
};

void validate(const GridSpec& g);

// Grid whose wall potential exceeds `margin` times a crude estimate of the
// top requested level (default margin 5).
GridSpec auto_grid(const PotentialPolynomial& poly, int count,
                   double step = 1e-3, double margin = 5.0);

struct LevelReport {
  std::vector<double> energies;              // ascending
  std::vector<Parity> parities;
  std::vector<double> convergence_estimate;  // |E(h) - E(h/2)| when known
  GridSpec grid;
  bool near_degenerate = false;  // some gap < 1e-6 (deep double wells)
};

// Lowest g.count eigenvalues of the central-difference discretization of
// H = -1/2 d^2/dx^2 + V with Dirichlet walls at +-L. Parity is classified
// from the dominant symmetric/antisymmetric eigenvector component (>= 99%).
LevelReport solve_bound_states(const PotentialPolynomial& poly,
                               const GridSpec& g);

// Solves at h and h/2 and Richardson-extrapolates the O(h^2) discretization;
// convergence_estimate[i] = |E_i(h) - E_i(h/2)|. Throws GridTooCoarse when
// that estimate exceeds `tolerance` for a requested level.
class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LevelReport refine(const PotentialPolynomial& poly, const GridSpec& g,
                   double tolerance = 1e30);

// Side-by-side account of the b < 0 breakdown: the algebraic construction
// tracks the side-well levels while the deformed-oscillator spectrum tracks
// the central well, so the two disagree on what the lowest levels are.
struct FailureDemoReport {
  PotentialPolynomial potential;           // double-well sextic
  std::vector<double> oracle_levels;       // numerical, lowest few
  std::vector<double> qes_levels;          // algebraic even-parity pair
  std::vector<double> suq_levels;          // deformed-spectrum prediction
  double ground_gap = 0.0;                 // |suq[0] - oracle ground|
  bool discrepancy_detected = false;
};

FailureDemoReport failure_demo();

}  // namespace suqes
