#include "suqes/tridiag.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace suqes {

TridiagEigenResult symmetric_tridiagonal_eigen(std::vector<double> diag,
                                               std::vector<double> offdiag,
                                               int first, int last,
                                               bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) throw std::invalid_argument("tridiag eigen: empty matrix");
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw std::invalid_argument("tridiag eigen: offdiag size must be n-1");
  }
  if (first < 0 || last >= n || first > last) {
    throw std::invalid_argument("tridiag eigen: bad index range");
  }
  const int requested = last - first + 1;
  offdiag.resize(n);  // dstevr wants workspace of length n

  std::vector<double> w(n);
  std::vector<double> z(want_vectors ? static_cast<size_t>(n) * requested : 1);
  std::vector<lapack_int> isuppz(2 * static_cast<size_t>(requested) + 2);
  lapack_int found = 0;

  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', n, diag.data(),
      offdiag.data(), 0.0, 0.0, first + 1, last + 1, 0.0, &found, w.data(),
      z.data(), n, isuppz.data());
  if (info != 0) {
    throw std::runtime_error("tridiag eigen: dstevr failed to converge");
  }
  if (found != requested) {
    throw std::runtime_error("tridiag eigen: fewer eigenvalues than requested");
  }

  TridiagEigenResult result;
  result.values.assign(w.begin(), w.begin() + found);
  if (want_vectors) {
    result.vectors.resize(found);
    for (int j = 0; j < found; ++j) {
      result.vectors[j].assign(z.begin() + static_cast<size_t>(j) * n,
                               z.begin() + static_cast<size_t>(j + 1) * n);
    }
  }
  return result;
}

}  // namespace suqes
