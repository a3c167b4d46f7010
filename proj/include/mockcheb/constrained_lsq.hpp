#ifndef MOCKCHEB_CONSTRAINED_LSQ_HPP
#define MOCKCHEB_CONSTRAINED_LSQ_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mockcheb/detail/linalg.hpp"
#include "mockcheb/grids.hpp"
#include "mockcheb/polynomials.hpp"

namespace mockcheb {

// Basis of the regression columns. The minimizer is the same in exact
// arithmetic; the monomial variant is kept for cross-checks at small degree,
// where it is still conditioned.
enum class RegressionBasis { chebyshev, monomial };

// The fitted constrained approximant P(t) + Q(t)*omega(t): P interpolates the
// samples on the mock-Chebyshev subset, Q is the simultaneous regression
// polynomial of degree p fitted on the residual set, and omega is the scaled
// node polynomial of the mock subset. The interpolation constraints hold
// exactly because omega vanishes at the mock nodes by construction.
struct ConstrainedApproximant {
  NodeSplit split;
  BarycentricInterpolant interp;
  ScaledNodePolynomial omega;
  ChebyshevSeries q;
  int p = 0;
  double residual_2norm = 0.0;  // discrete 2-norm of f - P_hat over the residual set

  double operator()(double t) const { return interp(t) + q(t) * omega(t); }
};

namespace detail {

struct RegressionParts {
  std::vector<double> residual_nodes;
  std::vector<double> rhs;  // f - P at the residual nodes
  double rhs_norm = 0.0;    // discrete 2-norm of f - P over the residual set
};

inline RegressionParts regression_parts(const EquispacedGrid& grid, const NodeSplit& split,
                                        std::span<const double> samples,
                                        const BarycentricInterpolant& interp) {
  RegressionParts parts;
  const std::size_t rows = split.residual.size();
  parts.residual_nodes.resize(rows);
  parts.rhs.resize(rows);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < rows; ++k) {
    const int idx = split.residual[k];
    const double x = grid.node(idx);
    parts.residual_nodes[k] = x;
    parts.rhs[k] = samples[static_cast<std::size_t>(idx)] - interp(x);
    norm2 += parts.rhs[k] * parts.rhs[k];
  }
  parts.rhs_norm = std::sqrt(norm2);
  return parts;
}

// Matrix rows omega(x) * basis_j(x) at each residual node, solved with
// Householder QR. Returns Chebyshev coefficients of Q regardless of the
// basis the columns were generated in.
inline LstsqSolution solve_regression(const RegressionParts& parts, const ScaledNodePolynomial& omega,
                                      int p, RegressionBasis basis) {
  const int rows = static_cast<int>(parts.residual_nodes.size());
  const int cols = p + 1;
  std::vector<double> matrix(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  std::vector<double> basis_row(static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i) {
    const double x = parts.residual_nodes[static_cast<std::size_t>(i)];
    const double w = omega(x);
    if (basis == RegressionBasis::chebyshev) {
      chebyshev_basis_row(x, p, basis_row);
    } else {
      basis_row[0] = 1.0;
      for (int j = 1; j <= p; ++j) {
        basis_row[static_cast<std::size_t>(j)] = basis_row[static_cast<std::size_t>(j - 1)] * x;
      }
    }
    for (int j = 0; j < cols; ++j) {
      matrix[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)] =
          w * basis_row[static_cast<std::size_t>(j)];
    }
  }
  LstsqSolution sol = householder_lstsq(std::move(matrix), rows, cols, parts.rhs);
  if (basis == RegressionBasis::monomial) {
    sol.coefficients = monomial_to_chebyshev(sol.coefficients);
  }
  return sol;
}

struct FitWithNorms {
  ConstrainedApproximant approximant;
  double mock_residual_norm = 0.0;  // discrete 2-norm of f - P over the residual set
};

inline FitWithNorms fit_full(std::span<const double> samples, int n, std::optional<int> p_opt,
                             RegressionBasis basis) {
  if (static_cast<int>(samples.size()) != n + 1) {
    throw std::domain_error("fit: need exactly n+1 samples");
  }
  for (double s : samples) {
    if (!std::isfinite(s)) throw std::domain_error("fit: samples must be finite");
  }
  const EquispacedGrid grid(n);
  NodeSplit split = extract_mock_subset(grid);
  const int m = split.m;
  const int p = p_opt.value_or(regression_degree(n));
  if (p < 1 || p > n - m - 1) {
    throw std::domain_error("fit: regression degree must satisfy 1 <= p <= n-m-1");
  }

  std::vector<double> mock_nodes(split.mock.size());
  std::vector<double> mock_values(split.mock.size());
  for (std::size_t k = 0; k < split.mock.size(); ++k) {
    mock_nodes[k] = grid.node(split.mock[k]);
    mock_values[k] = samples[static_cast<std::size_t>(split.mock[k])];
  }
  BarycentricInterpolant interp(mock_nodes, std::move(mock_values));

  RegressionParts parts = regression_parts(grid, split, samples, interp);
  ScaledNodePolynomial omega(std::move(mock_nodes), parts.residual_nodes);
  LstsqSolution sol = solve_regression(parts, omega, p, basis);

  FitWithNorms out{ConstrainedApproximant{std::move(split), std::move(interp), std::move(omega),
                                          ChebyshevSeries(std::move(sol.coefficients)), p,
                                          sol.residual_norm},
                   parts.rhs_norm};
  return out;
}

}  // namespace detail

// Solve the constrained least-squares problem for samples of f on the
// equispaced grid of n+1 nodes: among polynomials of degree m+p+1 that
// interpolate f on the mock-Chebyshev subset, minimize the discrete 2-norm of
// f - P over the residual nodes. Defaults to p = regression_degree(n).
inline ConstrainedApproximant fit(std::span<const double> samples, int n,
                                  std::optional<int> p = std::nullopt,
                                  RegressionBasis basis = RegressionBasis::chebyshev) {
  return detail::fit_full(samples, n, p, basis).approximant;
}

// The transformed regression target (f(t) - P(t)) / omega(t) at a residual
// node t. Undefined on the mock subset, where omega vanishes.
inline double fhat_eval(const ConstrainedApproximant& a, std::span<const double> samples, double t) {
  const int n = a.split.n;
  if (static_cast<int>(samples.size()) != n + 1) {
    throw std::domain_error("fhat_eval: need exactly n+1 samples");
  }
  const double u = (t + 1.0) * n / 2.0;
  const int i = static_cast<int>(std::lround(std::clamp(u, 0.0, static_cast<double>(n))));
  if ((2.0 * i - n) / n != t) {
    throw std::domain_error("fhat_eval: t is not a node of the equispaced grid");
  }
  if (a.split.is_mock(i)) {
    throw std::domain_error("fhat_eval: omega vanishes at mock-Chebyshev nodes");
  }
  return (samples[static_cast<std::size_t>(i)] - a.interp(t)) / a.omega(t);
}

// Discrete 2-norms over the residual set of (f - P_hat, f - P_mock): the
// constrained fit never does worse than the mock-subset interpolant alone,
// strictly better unless the transformed target is orthogonal to the
// regression space.
inline std::pair<double, double> two_norm_gap(std::span<const double> samples, int n,
                                              std::optional<int> p = std::nullopt,
                                              RegressionBasis basis = RegressionBasis::chebyshev) {
  detail::FitWithNorms fit = detail::fit_full(samples, n, p, basis);
  return {fit.approximant.residual_2norm, fit.mock_residual_norm};
}

}  // namespace mockcheb

#endif  // MOCKCHEB_CONSTRAINED_LSQ_HPP
