#include "suqes/qes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suqes/tridiag.hpp"

namespace suqes {

void validate(const QesPotentialSpec& s) {
  if (!(s.a >= 0.0)) throw std::invalid_argument("qes: a must be >= 0");
  if (s.n < 0) throw std::invalid_argument("qes: n must be >= 0");
  if (s.r != 0 && s.r != 1) throw std::invalid_argument("qes: r must be 0 or 1");
}

PotentialPolynomial qes_to_polynomial(const QesPotentialSpec& s) {
  validate(s);
  PotentialPolynomial p;
  p.c2 = 2.0 * (s.b * s.b - (2.0 * s.k() + 3.0) * s.a);
  p.c4 = 8.0 * s.a * s.b;
  p.c6 = 8.0 * s.a * s.a;
  return p;
}

QesMatrix qes_matrix(const QesPotentialSpec& s) {
  validate(s);
  const int m = s.n + 1;
  QesMatrix M;
  M.diag.resize(m);
  M.super.resize(m - 1);
  M.sub.resize(m - 1);
  for (int j = 0; j < m; ++j) {
    M.diag[j] = s.b * (4.0 * j + 2.0 * s.r + 1.0);
  }
  for (int j = 0; j + 1 < m; ++j) {
    M.super[j] = -(j + 1.0) * (2.0 * j + 2.0 * s.r + 1.0);
    M.sub[j] = 8.0 * s.a * (j - s.n);  // entry (j+1, j)
  }
  return M;
}

namespace {

// super[j]*sub[j] >= 0 for a >= 0, so D M D^-1 is symmetric with
// offdiag[j] = -sqrt(super[j]*sub[j]) (the sign is immaterial for the
// spectrum; keeping it negative matches the original signs when a > 0).
std::vector<double> symmetrized_offdiag(const QesMatrix& M) {
  std::vector<double> off(M.super.size());
  for (size_t j = 0; j < off.size(); ++j) {
    const double prod = M.super[j] * M.sub[j];
    if (prod < 0.0) {
      throw std::runtime_error("qes: matrix not symmetrizable (a < 0?)");
    }
    off[j] = -std::sqrt(prod);
  }
  return off;
}

}  // namespace

std::vector<double> qes_levels(const QesPotentialSpec& s) {
  const QesMatrix M = qes_matrix(s);
  auto result = symmetric_tridiagonal_eigen(M.diag, symmetrized_offdiag(M), 0,
                                            M.dim() - 1, false);
  std::sort(result.values.begin(), result.values.end());
  return result.values;
}

double QesEigenfunction::value(double x) const {
  const double x2 = x * x;
  double poly = 0.0;
  for (size_t j = coeffs.size(); j-- > 0;) {
    poly = poly * x2 + coeffs[j];
  }
  double out = poly * std::exp(-a * x2 * x2 - b * x2);
  if (r == 1) out *= x;
  return out;
}

QesEigenfunction qes_eigenfunction(const QesPotentialSpec& s, int level_index) {
  validate(s);
  if (!(s.a > 0.0)) {
    throw std::invalid_argument("qes_eigenfunction: a must be > 0");
  }
  if (level_index < 0 || level_index > s.n) {
    throw std::invalid_argument("qes_eigenfunction: level_index out of range");
  }
  const QesMatrix M = qes_matrix(s);
  const int m = M.dim();

  auto eig = symmetric_tridiagonal_eigen(M.diag, symmetrized_offdiag(M), 0,
                                         m - 1, true);
  for (int i = 0; i + 1 < m; ++i) {
    if (std::fabs(eig.values[i + 1] - eig.values[i]) <
        1e-12 * std::max(1.0, std::fabs(eig.values[i]))) {
      throw std::runtime_error("qes_eigenfunction: degenerate eigenvalues");
    }
  }

  // Undo the symmetrizing scaling: d_{j+1}/d_j = sqrt(super[j]/sub[j]),
  // coefficients of the original matrix are w_j / d_j.
  std::vector<double> scale(m, 1.0);
  for (int j = 0; j + 1 < m; ++j) {
    scale[j + 1] = scale[j] * std::sqrt(M.super[j] / M.sub[j]);
  }
  QesEigenfunction out;
  out.a = s.a;
  out.b = s.b;
  out.r = s.r;
  out.energy = eig.values[level_index];
  out.coeffs.resize(m);
  double max_abs = 0.0;
  for (int j = 0; j < m; ++j) {
    out.coeffs[j] = eig.vectors[level_index][j] / scale[j];
    max_abs = std::max(max_abs, std::fabs(out.coeffs[j]));
  }
  for (double& c : out.coeffs) c /= max_abs;
  return out;
}

}  // namespace suqes
