#ifndef MOCKCHEB_GRIDS_HPP
#define MOCKCHEB_GRIDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mockcheb {

// Density-matching constant pi/sqrt(2): an equispaced grid of n+1 points can
// host a mock-Chebyshev subset of degree floor(c*sqrt(n)).
inline constexpr double mock_degree_constant = std::numbers::pi / std::numbers::sqrt2;

// Degree of the mock-Chebyshev subset, floor(pi/sqrt(2) * sqrt(n)).
inline int mock_degree(int n) {
  if (n < 10) {
    throw std::domain_error("mock_degree: grid too small for mock-Chebyshev extraction (need n >= 10)");
  }
  return static_cast<int>(std::floor(mock_degree_constant * std::sqrt(static_cast<double>(n))));
}

// Degree of the simultaneous regression, floor(pi/sqrt(2) * sqrt(n/6)).
inline int regression_degree(int n) {
  if (n < 10) {
    throw std::domain_error("regression_degree: grid too small for mock-Chebyshev extraction (need n >= 10)");
  }
  return static_cast<int>(std::floor(mock_degree_constant * std::sqrt(n / 6.0)));
}

// n+1 equispaced nodes on [-1,1]. Nodes are built as (2i-n)/n so the grid is
// exactly antisymmetric and the endpoints are exactly +-1.
class EquispacedGrid {
 public:
  explicit EquispacedGrid(int n) : n_(n) {
    if (n < 1) throw std::domain_error("EquispacedGrid: need n >= 1");
    nodes_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      nodes_[static_cast<std::size_t>(i)] = (2.0 * i - n) / n;
    }
  }

  int n() const { return n_; }
  double spacing() const { return 2.0 / n_; }
  const std::vector<double>& nodes() const { return nodes_; }
  double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

 private:
  int n_;
  std::vector<double> nodes_;
};

// m+1 Chebyshev-Lobatto nodes -cos(pi*j/m), ascending. The right half mirrors
// the left half so the grid is symmetric to the bit.
class ChebyshevLobattoGrid {
 public:
  explicit ChebyshevLobattoGrid(int m) : m_(m) {
    if (m < 1) throw std::domain_error("ChebyshevLobattoGrid: need m >= 1");
    nodes_.resize(static_cast<std::size_t>(m) + 1);
    for (int j = 0; 2 * j < m; ++j) {
      const double v = -std::cos(std::numbers::pi * j / m);
      nodes_[static_cast<std::size_t>(j)] = v;
      nodes_[static_cast<std::size_t>(m - j)] = -v;
    }
    if (m % 2 == 0) nodes_[static_cast<std::size_t>(m) / 2] = 0.0;
  }

  int m() const { return m_; }
  const std::vector<double>& nodes() const { return nodes_; }
  double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }

 private:
  int m_;
  std::vector<double> nodes_;
};

// Partition of an equispaced grid into the mock-Chebyshev subset (m+1 indices)
// and the residual set (n-m indices). Indices are stored instead of node
// values so membership tests are exact.
struct NodeSplit {
  int n = 0;
  int m = 0;
  std::vector<int> mock;      // ascending, contains 0 and n
  std::vector<int> residual;  // ascending complement of mock

  bool is_mock(int index) const {
    return std::binary_search(mock.begin(), mock.end(), index);
  }
};

// Select, for each Chebyshev-Lobatto node in ascending order, the nearest
// still-unused equispaced node (ties resolved toward the smaller index).
// Wherever plain nearest-node selection is injective this is identical to it;
// at the sporadic n where the first interior Chebyshev-Lobatto node falls
// below the first grid midpoint it keeps the selection free of duplicates.
inline NodeSplit extract_mock_subset(const EquispacedGrid& grid) {
  const int n = grid.n();
  const int m = mock_degree(n);
  const ChebyshevLobattoGrid cl(m);
  const std::vector<double>& x = grid.nodes();
  const double h = grid.spacing();

  std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> picks;
  picks.reserve(static_cast<std::size_t>(m) + 1);

  for (double target : cl.nodes()) {
    const int center = std::clamp(
        static_cast<int>(std::floor((target + 1.0) * n / 2.0)), 0, n);
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    auto consider = [&](int cand) {
      if (cand < 0 || cand > n || taken[static_cast<std::size_t>(cand)]) return;
      const double dist = std::abs(x[static_cast<std::size_t>(cand)] - target);
      if (dist < best_dist || (dist == best_dist && cand < best)) {
        best = cand;
        best_dist = dist;
      }
    };
    for (int radius = 0; radius <= n + 1; ++radius) {
      if (radius == 0) {
        consider(center);
      } else {
        consider(center - radius);
        consider(center + radius);
      }
      // nodes in later rings are at least (radius-1)*h away from the target
      if (best >= 0 && (radius - 1) * h > best_dist) break;
    }
    if (best < 0) {
      throw std::logic_error("extract_mock_subset: no unused node found (n=" + std::to_string(n) + ")");
    }
    taken[static_cast<std::size_t>(best)] = 1;
    picks.push_back(best);
  }

  std::sort(picks.begin(), picks.end());
  if (static_cast<int>(picks.size()) != m + 1 ||
      std::adjacent_find(picks.begin(), picks.end()) != picks.end() ||
      picks.front() != 0 || picks.back() != n) {
    throw std::logic_error(
        "extract_mock_subset: internal invariant violation (duplicate or missing endpoint selection at n=" +
        std::to_string(n) + ")");
  }

  NodeSplit split;
  split.n = n;
  split.m = m;
  split.mock = std::move(picks);
  split.residual.reserve(static_cast<std::size_t>(n - m));
  for (int i = 0, k = 0; i <= n; ++i) {
    if (k < static_cast<int>(split.mock.size()) && split.mock[static_cast<std::size_t>(k)] == i) {
      ++k;
    } else {
      split.residual.push_back(i);
    }
  }
  return split;
}

}  // namespace mockcheb

#endif  // MOCKCHEB_GRIDS_HPP
