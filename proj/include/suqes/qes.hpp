#pragma once

#include <vector>

#include "suqes/wkbep.hpp"

namespace suqes {

// Quasi-exactly soluble sextic potential
//   V(x) = 8 a^2 x^6 + 8 a b x^4 + 2 [b^2 - (2k+3) a] x^2,  k = 2n + r.
// The n+1 lowest levels of parity (-1)^r are algebraically computable.
struct QesPotentialSpec {
  double a = 1.0;  // >= 0
  double b = 0.0;
  int n = 0;   // quasi-exact sector size - 1
  int r = 0;   // parity label, 0 or 1

  int k() const { return 2 * n + r; }
};

void validate(const QesPotentialSpec& s);

PotentialPolynomial qes_to_polynomial(const QesPotentialSpec& s);

// Hamiltonian restricted to the invariant subspace spanned by
// x^(2j+r) exp(-a x^4 - b x^2), j = 0..n, as an (n+1)x(n+1) tridiagonal
// matrix acting on the polynomial coefficients:
//   diag[j]  = b (4j + 2r + 1)
//   super[j] = -(j+1)(2j + 2r + 1)       (column j+1 of row j)
//   sub[j]   = 8 a (j - n)               (column j of row j+1)
// Its eigenvalues are the quasi-exact energies under H = -1/2 d^2/dx^2 + V.
struct QesMatrix {
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> sub;

  int dim() const { return static_cast<int>(diag.size()); }
};

QesMatrix qes_matrix(const QesPotentialSpec& s);

// Ascending quasi-exact energies (all real: the matrix is symmetrizable by a
// positive diagonal scaling for a >= 0).
std::vector<double> qes_levels(const QesPotentialSpec& s);

// psi(x) = x^r (sum_j coeffs[j] x^(2j)) exp(-a x^4 - b x^2),
// normalized so that max |coeffs[j]| = 1.
struct QesEigenfunction {
  std::vector<double> coeffs;
  double a = 0.0;
  double b = 0.0;
  int r = 0;
  double energy = 0.0;

  double value(double x) const;
};

// Eigenvector of qes_matrix for the level_index-th smallest eigenvalue.
// Requires a > 0 (normalizability); throws on degenerate eigenvalues.
QesEigenfunction qes_eigenfunction(const QesPotentialSpec& s, int level_index);

}  // namespace suqes
