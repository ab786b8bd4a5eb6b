#pragma once

#include <vector>

namespace suqes {

// Eigenvalues (and optionally eigenvectors) of a symmetric tridiagonal matrix,
// indices [first, last] (0-based, inclusive), ascending. Backed by LAPACK
// dstevr. Throws std::runtime_error on non-convergence.
struct TridiagEigenResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // empty unless requested
};

TridiagEigenResult symmetric_tridiagonal_eigen(std::vector<double> diag,
                                               std::vector<double> offdiag,
                                               int first, int last,
                                               bool want_vectors);

}  // namespace suqes
