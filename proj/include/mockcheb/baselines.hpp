#ifndef MOCKCHEB_BASELINES_HPP
#define MOCKCHEB_BASELINES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mockcheb/detail/linalg.hpp"
#include "mockcheb/polynomials.hpp"

namespace mockcheb {

// Floater-Hormann barycentric rational interpolant: blends local degree-d
// interpolating polynomials into a pole-free rational function. Construction
// uses the closed barycentric weights (sums of local inverse products), so
// evaluation is O(n) regardless of d. d = n reduces to polynomial
// interpolation, d = 0 to the (-1)^i rational interpolant.
class FloaterHormannInterpolant {
 public:
  FloaterHormannInterpolant(std::vector<double> nodes, std::vector<double> values, int d)
      : nodes_(std::move(nodes)), values_(std::move(values)), d_(d) {
    const int n = static_cast<int>(nodes_.size()) - 1;
    if (n < 0 || nodes_.size() != values_.size()) {
      throw std::domain_error("FloaterHormannInterpolant: need equally many nodes and values");
    }
    if (d < 0 || d > n) throw std::domain_error("FloaterHormannInterpolant: blending degree out of range");
    for (int i = 0; i < n; ++i) {
      if (!(nodes_[static_cast<std::size_t>(i)] < nodes_[static_cast<std::size_t>(i + 1)])) {
        throw std::domain_error("FloaterHormannInterpolant: nodes must be strictly increasing");
      }
    }
    weights_.assign(nodes_.size(), 0.0);
    double wmax = 0.0;
    for (int k = 0; k <= n; ++k) {
      const int i_lo = std::max(0, k - d);
      const int i_hi = std::min(k, n - d);
      double w = 0.0;
      for (int i = i_lo; i <= i_hi; ++i) {
        double prod = 1.0;
        for (int j = i; j <= i + d; ++j) {
          if (j == k) continue;
          prod *= nodes_[static_cast<std::size_t>(k)] - nodes_[static_cast<std::size_t>(j)];
        }
        w += (i % 2 == 0 ? 1.0 : -1.0) / prod;
      }
      weights_[static_cast<std::size_t>(k)] = w;
      wmax = std::max(wmax, std::abs(w));
    }
    for (double& w : weights_) w /= wmax;
  }

  double operator()(double t) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double diff = t - nodes_[i];
      if (diff == 0.0) return values_[i];
      const double q = weights_[i] / diff;
      num += q * values_[i];
      den += q;
    }
    return num / den;
  }

  int d() const { return d_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> weights_;
  int d_;
};

struct BlendingSearchResult {
  int d = 0;
  double error = 0.0;
};

// Sweep d = 0..d_max and return the blending degree with the smallest uniform
// error against the reference values on the given grid; ties go to smaller d.
inline BlendingSearchResult fh_best_d(std::vector<double> nodes, std::vector<double> values, int d_max,
                                      std::span<const double> grid, std::span<const double> reference) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (d_max < 0 || d_max > n) throw std::domain_error("fh_best_d: d_max out of range");
  if (grid.size() != reference.size() || grid.empty()) {
    throw std::domain_error("fh_best_d: error grid and reference values must match");
  }
  BlendingSearchResult best{0, std::numeric_limits<double>::infinity()};
  for (int d = 0; d <= d_max; ++d) {
    const FloaterHormannInterpolant r(nodes, values, d);
    double err = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double e = std::abs(r(grid[k]) - reference[k]);
      err = std::max(err, std::isfinite(e) ? e : std::numeric_limits<double>::infinity());
    }
    if (err < best.error) best = {d, err};
  }
  return best;
}

// Hermite function interpolant in first barycentric form,
//   H(t) = W(t) * sum_j mu_j f_j / (t - x_j),  mu_j = 1 / W'(x_j),
// with the Gaussian-damped node polynomial
//   W(t) = exp(-(n-1)/2 * log(4) * gamma^2 t^2) * prod_j (t - x_j).
// The node-polynomial magnitudes are carried in log space and the cancelling
// barycentric sum is accumulated in long double: the first form loses about
// eps times the Lebesgue function otherwise, which already costs digits at a
// few dozen equispaced nodes. Construction refuses configurations whose
// evaluation would leave the double range.
class HermiteFunctionInterpolant {
 public:
  HermiteFunctionInterpolant(std::vector<double> nodes, std::vector<double> values, double gamma = 1.0)
      : nodes_(std::move(nodes)), values_(std::move(values)), gamma_(gamma) {
    const std::size_t n = nodes_.size();
    if (n < 2 || n != values_.size()) {
      throw std::domain_error("HermiteFunctionInterpolant: need at least two nodes and matching values");
    }
    if (!(gamma >= 0.0)) throw std::domain_error("HermiteFunctionInterpolant: gamma must be >= 0");
    detail::require_distinct(nodes_, "HermiteFunctionInterpolant");
    damping_ = 0.5L * (static_cast<long double>(n) - 1.0L) * std::log(4.0L) *
               static_cast<long double>(gamma) * static_cast<long double>(gamma);

    log_dw_.resize(n);
    sign_dw_.resize(n);
    long double lo = std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      long double sum = -damping_ * nodes_[j] * nodes_[j];
      int sign = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        const long double diff = static_cast<long double>(nodes_[j]) - nodes_[i];
        if (diff < 0.0L) sign = -sign;
        sum += std::log(std::abs(diff));
      }
      log_dw_[j] = sum;
      sign_dw_[j] = sign;
      lo = std::min(lo, sum);
    }
    // probe the node-polynomial magnitude; terms of H scale like
    // exp(logW(t) - min_j logW'(x_j))
    long double hi = -std::numeric_limits<long double>::infinity();
    const int probes = 512;
    for (int k = 0; k <= probes; ++k) {
      const double t = (2.0 * k - probes) / probes;
      hi = std::max(hi, log_w(t, nullptr));
    }
    if (hi - lo > 700.0L) {
      throw std::runtime_error(
          "HermiteFunctionInterpolant: node polynomial spans more than the double exponent range "
          "(too many interpolation points)");
    }
  }

  double operator()(double t) const {
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (t == nodes_[j]) return values_[j];
    }
    int sign_w = 1;
    const long double lw = log_w(t, &sign_w);
    long double sum = 0.0L;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      const long double term =
          std::exp(lw - log_dw_[j]) / (static_cast<long double>(t) - nodes_[j]);
      sum += (sign_w * sign_dw_[j]) * term * static_cast<long double>(values_[j]);
    }
    const double out = static_cast<double>(sum);
    if (!std::isfinite(out)) {
      throw std::runtime_error("HermiteFunctionInterpolant: evaluation overflowed");
    }
    return out;
  }

  double gamma() const { return gamma_; }
  const std::vector<double>& nodes() const { return nodes_; }

 private:
  long double log_w(double t, int* sign) const {
    long double sum = -damping_ * t * t;
    int sg = 1;
    for (double x : nodes_) {
      const long double d = static_cast<long double>(t) - x;
      if (d < 0.0L) sg = -sg;
      sum += std::log(std::abs(d));
    }
    if (sign) *sign = sg;
    return sum;
  }

  std::vector<double> nodes_;
  std::vector<double> values_;
  double gamma_;
  long double damping_ = 0.0L;
  std::vector<long double> log_dw_;  // log |W'(x_j)|
  std::vector<int> sign_dw_;
};

enum class RbfKernel { mn, w2, imq, g };

inline const char* rbf_kernel_name(RbfKernel k) {
  switch (k) {
    case RbfKernel::mn: return "mn";
    case RbfKernel::w2: return "w2";
    case RbfKernel::imq: return "imq";
    case RbfKernel::g: return "g";
  }
  return "?";
}

inline bool rbf_kernel_needs_epsilon(RbfKernel k) {
  return k == RbfKernel::imq || k == RbfKernel::g;
}

// RBF interpolant S(t) = sum_i lambda_i phi(|t - c_i|). The symmetric system
// is assembled half and mirrored, then solved by partially pivoted
// elimination; the achieved interpolation residual at the centers is kept for
// conditioning diagnostics.
class RbfInterpolant {
 public:
  RbfInterpolant(RbfKernel kernel, std::vector<double> centers, std::vector<double> values,
                 std::optional<double> epsilon = std::nullopt, int mn_power = 1)
      : kernel_(kernel), centers_(std::move(centers)), mn_power_(mn_power) {
    const std::size_t n = centers_.size();
    if (n == 0 || n != values.size()) {
      throw std::domain_error("RbfInterpolant: need equally many centers and values, at least one");
    }
    detail::require_distinct(centers_, "RbfInterpolant");
    if (mn_power < 0) throw std::domain_error("RbfInterpolant: mn power must be >= 0");
    if (rbf_kernel_needs_epsilon(kernel)) {
      if (!epsilon || !(*epsilon > 0.0)) {
        throw std::domain_error("RbfInterpolant: this kernel needs a shape parameter epsilon > 0");
      }
      epsilon_ = *epsilon;
    } else if (epsilon) {
      epsilon_ignored_ = true;  // parameter-free kernel, epsilon accepted but unused
    }

    std::vector<double> matrix = system_matrix(kernel, centers_, epsilon_, mn_power_);
    try {
      lambda_ = detail::lu_solve(std::move(matrix), static_cast<int>(n), values);
    } catch (const std::runtime_error&) {
      throw std::runtime_error("RbfInterpolant: interpolation system is numerically singular");
    }

    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    for (std::size_t j = 0; j < n; ++j) {
      node_residual_ = std::max(node_residual_, std::abs((*this)(centers_[j]) - values[j]) / scale);
    }
  }

  double operator()(double t) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      sum += lambda_[i] * kernel_value(kernel_, std::abs(t - centers_[i]), epsilon_, mn_power_);
    }
    return sum;
  }

  static double kernel_value(RbfKernel kernel, double r, double epsilon, int mn_power) {
    switch (kernel) {
      case RbfKernel::mn:
        return std::pow(r, 2 * mn_power + 1);
      case RbfKernel::w2: {
        if (r >= 1.0) return 0.0;
        const double u = 1.0 - r;
        const double u2 = u * u;
        return u2 * u2 * (1.0 + 4.0 * r);
      }
      case RbfKernel::imq:
        return 1.0 / std::sqrt(1.0 + epsilon * epsilon * r * r);
      case RbfKernel::g:
        return std::exp(-epsilon * epsilon * r * r);
    }
    return 0.0;
  }

  static std::vector<double> system_matrix(RbfKernel kernel, const std::vector<double>& centers,
                                           double epsilon, int mn_power) {
    const std::size_t n = centers.size();
    std::vector<double> matrix(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double v = kernel_value(kernel, std::abs(centers[i] - centers[j]), epsilon, mn_power);
        matrix[i * n + j] = v;
        matrix[j * n + i] = v;
      }
    }
    return matrix;
  }

  RbfKernel kernel() const { return kernel_; }
  double epsilon() const { return epsilon_; }
  bool epsilon_ignored() const { return epsilon_ignored_; }
  double node_residual() const { return node_residual_; }
  const std::vector<double>& coefficients() const { return lambda_; }
  const std::vector<double>& centers() const { return centers_; }

 private:
  RbfKernel kernel_;
  std::vector<double> centers_;
  std::vector<double> lambda_;
  double epsilon_ = 0.0;
  int mn_power_;
  bool epsilon_ignored_ = false;
  double node_residual_ = 0.0;
};

struct ShapeSearchResult {
  double epsilon = 0.0;
  double error = 0.0;
};

// 40 logarithmically spaced shape parameters in [1e-2, 1e2].
inline std::vector<double> default_eps_grid() {
  std::vector<double> grid(40);
  for (int i = 0; i < 40; ++i) {
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 4.0 * i / 39.0);
  }
  return grid;
}

// Trial-and-error shape search: fit at every epsilon in the grid and keep the
// one with the smallest uniform error on the given grid; ties go to the
// smaller epsilon. Candidates whose system is singular are skipped.
inline ShapeSearchResult rbf_trial_and_error(RbfKernel kernel, const std::vector<double>& centers,
                                             const std::vector<double>& values,
                                             std::vector<double> eps_grid,
                                             std::span<const double> grid,
                                             std::span<const double> reference, int mn_power = 1) {
  if (eps_grid.empty()) throw std::domain_error("rbf_trial_and_error: empty epsilon grid");
  for (double e : eps_grid) {
    if (!(e > 0.0)) throw std::domain_error("rbf_trial_and_error: epsilon candidates must be positive");
  }
  if (grid.size() != reference.size() || grid.empty()) {
    throw std::domain_error("rbf_trial_and_error: error grid and reference values must match");
  }
  std::sort(eps_grid.begin(), eps_grid.end());
  ShapeSearchResult best{0.0, std::numeric_limits<double>::infinity()};
  bool any = false;
  for (double eps : eps_grid) {
    double err;
    try {
      const RbfInterpolant s(kernel, centers, values, eps, mn_power);
      err = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double e = std::abs(s(grid[k]) - reference[k]);
        err = std::max(err, std::isfinite(e) ? e : std::numeric_limits<double>::infinity());
      }
    } catch (const std::runtime_error&) {
      continue;
    }
    if (!any || err < best.error) best = {eps, err};
    any = true;
  }
  if (!any) throw std::runtime_error("rbf_trial_and_error: every candidate system was singular");
  return best;
}

}  // namespace mockcheb

#endif  // MOCKCHEB_BASELINES_HPP
