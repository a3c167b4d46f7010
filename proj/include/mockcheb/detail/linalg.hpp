#ifndef MOCKCHEB_DETAIL_LINALG_HPP
#define MOCKCHEB_DETAIL_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mockcheb::detail {

struct LstsqSolution {
  std::vector<double> coefficients;
  double residual_norm = 0.0;  // 2-norm of b - A*coefficients
};

// Householder QR least squares for a dense row-major rows x cols matrix,
// rows >= cols. The trailing part of Q^T b yields the residual norm for free.
inline LstsqSolution householder_lstsq(std::vector<double> a, int rows, int cols,
                                       std::vector<double> b) {
  if (cols < 1 || rows < cols) throw std::invalid_argument("householder_lstsq: need rows >= cols >= 1");
  if (static_cast<int>(b.size()) != rows || static_cast<int>(a.size()) != rows * cols) {
    throw std::invalid_argument("householder_lstsq: shape mismatch");
  }
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  };

  std::vector<double> v(static_cast<std::size_t>(rows), 0.0);
  for (int k = 0; k < cols; ++k) {
    double norm2 = 0.0;
    for (int i = k; i < rows; ++i) {
      v[static_cast<std::size_t>(i)] = at(i, k);
      norm2 += at(i, k) * at(i, k);
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      throw std::runtime_error("householder_lstsq: numerically rank-deficient matrix");
    }
    const double alpha = (v[static_cast<std::size_t>(k)] >= 0.0) ? -norm : norm;
    v[static_cast<std::size_t>(k)] -= alpha;
    double vv = 0.0;
    for (int i = k; i < rows; ++i) vv += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    if (vv == 0.0) {
      throw std::runtime_error("householder_lstsq: numerically rank-deficient matrix");
    }
    const double beta = 2.0 / vv;
    for (int j = k + 1; j < cols; ++j) {
      double s = 0.0;
      for (int i = k; i < rows; ++i) s += v[static_cast<std::size_t>(i)] * at(i, j);
      const double f = beta * s;
      for (int i = k; i < rows; ++i) at(i, j) -= f * v[static_cast<std::size_t>(i)];
    }
    double s = 0.0;
    for (int i = k; i < rows; ++i) s += v[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    const double f = beta * s;
    for (int i = k; i < rows; ++i) b[static_cast<std::size_t>(i)] -= f * v[static_cast<std::size_t>(i)];
    at(k, k) = alpha;
  }

  double diag_max = 0.0;
  for (int k = 0; k < cols; ++k) diag_max = std::max(diag_max, std::abs(at(k, k)));
  const double tiny = static_cast<double>(rows) * std::numeric_limits<double>::epsilon() * diag_max;

  LstsqSolution out;
  out.coefficients.assign(static_cast<std::size_t>(cols), 0.0);
  for (int k = cols - 1; k >= 0; --k) {
    if (std::abs(at(k, k)) <= tiny) {
      throw std::runtime_error("householder_lstsq: numerically rank-deficient matrix");
    }
    double s = b[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < cols; ++j) s -= at(k, j) * out.coefficients[static_cast<std::size_t>(j)];
    out.coefficients[static_cast<std::size_t>(k)] = s / at(k, k);
  }
  double r2 = 0.0;
  for (int i = cols; i < rows; ++i) r2 += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  out.residual_norm = std::sqrt(r2);
  return out;
}

// Gaussian elimination with partial pivoting for a dense row-major square
// system. Throws when a pivot vanishes exactly.
inline std::vector<double> lu_solve(std::vector<double> a, int n, std::vector<double> b) {
  if (n < 1) throw std::invalid_argument("lu_solve: need n >= 1");
  if (static_cast<int>(b.size()) != n || static_cast<int>(a.size()) != n * n) {
    throw std::invalid_argument("lu_solve: shape mismatch");
  }
  auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n); };

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double pmax = std::abs(row(k)[k]);
    for (int i = k + 1; i < n; ++i) {
      const double m = std::abs(row(i)[k]);
      if (m > pmax) {
        pmax = m;
        piv = i;
      }
    }
    if (pmax == 0.0) throw std::runtime_error("lu_solve: numerically singular matrix");
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(row(k)[j], row(piv)[j]);
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    const double inv_piv = 1.0 / row(k)[k];
    const double* rk = row(k);
    const double bk = b[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      double* ri = row(i);
      const double l = ri[k] * inv_piv;
      if (l == 0.0) continue;
      for (int j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
      b[static_cast<std::size_t>(i)] -= l * bk;
    }
  }

  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int k = n - 1; k >= 0; --k) {
    double s = b[static_cast<std::size_t>(k)];
    const double* rk = row(k);
    for (int j = k + 1; j < n; ++j) s -= rk[j] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(k)] = s / rk[k];
  }
  return x;
}

}  // namespace mockcheb::detail

#endif  // MOCKCHEB_DETAIL_LINALG_HPP
