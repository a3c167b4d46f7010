#ifndef MOCKCHEB_POLYNOMIALS_HPP
#define MOCKCHEB_POLYNOMIALS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mockcheb {

namespace detail {

// Running product that renormalizes its mantissa into [0.5, 1) every few
// factors, keeping the base-2 exponent in a separate integer. Long node
// polynomial products stay representable this way even when the plain double
// product would leave the exponent range.
class ScaledProduct {
 public:
  void multiply(double factor) {
    mantissa_ *= factor;
    if (++pending_ == kRenormInterval) renormalize();
  }

  bool zero() const { return mantissa_ == 0.0; }

  // product * 2^extra_pow2, with extra_pow2 split into integer and fractional
  // parts by the caller-supplied multiplier.
  double value(double extra_multiplier, long extra_pow2) {
    renormalize();
    const long e = exponent_ + extra_pow2;
    const int clamped = static_cast<int>(
        std::clamp<long>(e, std::numeric_limits<int>::min(), std::numeric_limits<int>::max()));
    return std::ldexp(mantissa_ * extra_multiplier, clamped);
  }

 private:
  static constexpr int kRenormInterval = 32;

  void renormalize() {
    int e = 0;
    mantissa_ = std::frexp(mantissa_, &e);
    exponent_ += e;
    pending_ = 0;
  }

  double mantissa_ = 1.0;
  long exponent_ = 0;
  int pending_ = 0;
};

// Sum of log|t - x_i|; -infinity when t coincides with a node. sign receives
// the parity of the factors when non-null.
inline double log_abs_product(std::span<const double> nodes, double t, int* sign = nullptr) {
  double sum = 0.0;
  int sg = 1;
  for (double x : nodes) {
    const double d = t - x;
    if (d == 0.0) {
      if (sign) *sign = 0;
      return -std::numeric_limits<double>::infinity();
    }
    if (d < 0.0) sg = -sg;
    sum += std::log(std::abs(d));
  }
  if (sign) *sign = sg;
  return sum;
}

inline void require_distinct(std::span<const double> nodes, const char* who) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw std::domain_error(std::string(who) + ": duplicate nodes");
    }
  }
}

}  // namespace detail

// Barycentric Lagrange interpolant (second form). Weights are computed with
// the O(k^2) product formula and rescaled so max|w| = 1; the rescaling leaves
// the second-form ratio unchanged.
class BarycentricInterpolant {
 public:
  BarycentricInterpolant(std::vector<double> nodes, std::vector<double> values)
      : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.empty() || nodes_.size() != values_.size()) {
      throw std::domain_error("BarycentricInterpolant: need equally many nodes and values, at least one");
    }
    const std::size_t k = nodes_.size();
    weights_.assign(k, 0.0);
    double wmax = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double prod = 1.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        const double d = nodes_[i] - nodes_[j];
        if (d == 0.0) throw std::domain_error("BarycentricInterpolant: duplicate nodes");
        prod *= d;
      }
      weights_[i] = 1.0 / prod;
      wmax = std::max(wmax, std::abs(weights_[i]));
    }
    for (double& w : weights_) w /= wmax;
  }

  // Exact at the stored nodes by the bit-equality special case.
  double operator()(double t) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double d = t - nodes_[i];
      if (d == 0.0) return values_[i];
      const double q = weights_[i] / d;
      num += q * values_[i];
      den += q;
    }
    return num / den;
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> weights_;
};

// The node polynomial prod(t - x_i) scaled by exp(-s), where s is the largest
// log-magnitude of the plain product over a set of reference points. Degrees
// around 200 put the plain product tens of orders of magnitude away from 1;
// the stored evaluator keeps every value near the representable sweet spot
// and the regression coefficients absorb the scale.
class ScaledNodePolynomial {
 public:
  ScaledNodePolynomial(std::vector<double> nodes, std::span<const double> reference_points)
      : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::domain_error("ScaledNodePolynomial: need at least one node");
    if (reference_points.empty()) throw std::domain_error("ScaledNodePolynomial: need reference points");
    detail::require_distinct(nodes_, "ScaledNodePolynomial");
    log_scale_ = -std::numeric_limits<double>::infinity();
    for (double t : reference_points) {
      log_scale_ = std::max(log_scale_, detail::log_abs_product(nodes_, t));
    }
    if (!std::isfinite(log_scale_)) {
      throw std::domain_error("ScaledNodePolynomial: every reference point coincides with a node");
    }
    // exp(-s) = scale_multiplier * 2^scale_pow2 with the multiplier in (0.5, 1]
    const double q = log_scale_ / std::numbers::ln2;
    const double qi = std::floor(q);
    scale_multiplier_ = std::exp2(-(q - qi));
    scale_pow2_ = -static_cast<long>(qi);
  }

  // Zero exactly at the stored nodes; elsewhere a scaled running product.
  double operator()(double t) const {
    detail::ScaledProduct prod;
    for (double x : nodes_) {
      const double f = t - x;
      if (f == 0.0) return 0.0;
      prod.multiply(f);
    }
    return prod.value(scale_multiplier_, scale_pow2_);
  }

  double log_scale() const { return log_scale_; }
  const std::vector<double>& nodes() const { return nodes_; }

 private:
  std::vector<double> nodes_;
  double log_scale_ = 0.0;
  double scale_multiplier_ = 1.0;
  long scale_pow2_ = 0;
};

// Chebyshev series sum c_k T_k(t), evaluated by the Clenshaw backward
// recurrence. The coefficients are never expanded to monomials.
class ChebyshevSeries {
 public:
  explicit ChebyshevSeries(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::domain_error("ChebyshevSeries: empty coefficient list");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }

  double operator()(double t) const {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
      const double b0 = c_[k] + 2.0 * t * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return c_[0] + t * b1 - b2;
  }

  const std::vector<double>& coefficients() const { return c_; }

 private:
  std::vector<double> c_;
};

namespace detail {

// T_0(t) .. T_p(t) by the forward recurrence.
inline void chebyshev_basis_row(double t, int p, std::span<double> out) {
  out[0] = 1.0;
  if (p >= 1) out[1] = t;
  for (int k = 2; k <= p; ++k) {
    out[static_cast<std::size_t>(k)] =
        2.0 * t * out[static_cast<std::size_t>(k - 1)] - out[static_cast<std::size_t>(k - 2)];
  }
}

// Rewrite sum a_k t^k as a Chebyshev series via Horner steps in the
// Chebyshev basis: c <- t*c + a_k, using t*T_j = (T_{j+1} + T_{|j-1|})/2.
inline std::vector<double> monomial_to_chebyshev(std::span<const double> monomial) {
  std::vector<double> c{0.0};
  for (std::size_t k = monomial.size(); k-- > 0;) {
    std::vector<double> next(c.size() + 1, 0.0);
    next[1] += c[0];
    for (std::size_t j = 1; j < c.size(); ++j) {
      next[j + 1] += 0.5 * c[j];
      next[j - 1] += 0.5 * c[j];
    }
    next[0] += monomial[k];
    c = std::move(next);
  }
  c.resize(std::max<std::size_t>(monomial.size(), 1));
  return c;
}

}  // namespace detail

}  // namespace mockcheb

#endif  // MOCKCHEB_POLYNOMIALS_HPP
