#ifndef MOCKCHEB_BENCH_HPP
#define MOCKCHEB_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <istream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mockcheb/baselines.hpp"
#include "mockcheb/constrained_lsq.hpp"
#include "mockcheb/grids.hpp"
#include "mockcheb/polynomials.hpp"

namespace mockcheb {

struct TestFunction {
  std::string name;
  std::function<double(double)> f;
  std::string smoothness_note;

  double operator()(double t) const { return f(t); }
};

// The standard battery f1..f7. All are total and finite on [-1,1].
inline TestFunction test_function(const std::string& name) {
  if (name == "f1") {
    return {"f1", [](double t) { return std::sqrt(std::abs(t)); }, "Hoelder continuous, exponent 1/2"};
  }
  if (name == "f2") {
    return {"f2", [](double t) { return 1.0 / (1.0 + 25.0 * t * t); }, "analytic, poles at +-i/5"};
  }
  if (name == "f3") {
    return {"f3", [](double t) { return 1e-15 / (1e-15 + 25.0 * t * t); },
            "analytic, squashed onto the axes"};
  }
  if (name == "f4") {
    return {"f4", [](double t) { return t * std::abs(t); }, "C^1"};
  }
  if (name == "f5") {
    return {"f5", [](double t) { return 1.0 / (t * t - 1.5); }, "analytic, poles at +-sqrt(1.5)"};
  }
  if (name == "f6") {
    const double a = std::sqrt(26.0) / 5.0 - 1.0;
    const double b = (13.0 / 50.0) * (13.0 / 50.0);
    return {"f6", [a, b](double t) { return 1.0 / (t * t * t * t + a * t * t + b); },
            "analytic, poles at +-1/5 +- i/10"};
  }
  if (name == "f7") {
    const double b = (2.0 / 50.0) * (2.0 / 50.0);
    return {"f7", [b](double t) { return 1.0 / (t * t * t * t + b); },
            "analytic, poles near +-(1+-i)/(5 sqrt 2)"};
  }
  throw std::domain_error("test_function: unknown name '" + name + "' (expected f1..f7)");
}

// grid_size equispaced points covering [-1,1], exactly antisymmetric.
inline std::vector<double> uniform_grid(int grid_size) {
  if (grid_size < 2) throw std::domain_error("uniform_grid: need at least two points");
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  const int span = grid_size - 1;
  for (int k = 0; k < grid_size; ++k) {
    grid[static_cast<std::size_t>(k)] = (2.0 * k - span) / span;
  }
  return grid;
}

// Maximum absolute deviation over an equispaced evaluation grid. Non-finite
// approximant values propagate as +infinity.
inline double uniform_error(const std::function<double(double)>& approx,
                            const std::function<double(double)>& exact, int grid_size = 10001) {
  const std::vector<double> grid = uniform_grid(grid_size);
  double err = 0.0;
  for (double t : grid) {
    const double e = std::abs(approx(t) - exact(t));
    if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
    err = std::max(err, e);
  }
  return err;
}

inline double uniform_error(const std::function<double(double)>& approx, const TestFunction& f,
                            int grid_size = 10001) {
  return uniform_error(approx, f.f, grid_size);
}

enum class Method { cmcls, mock_only, full_interp, fh, hermite, rbf_mn, rbf_w2, rbf_imq, rbf_g };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::cmcls: return "cmcls";
    case Method::mock_only: return "mock_only";
    case Method::full_interp: return "full_interp";
    case Method::fh: return "fh";
    case Method::hermite: return "hermite";
    case Method::rbf_mn: return "rbf_mn";
    case Method::rbf_w2: return "rbf_w2";
    case Method::rbf_imq: return "rbf_imq";
    case Method::rbf_g: return "rbf_g";
  }
  return "?";
}

inline Method method_from_name(const std::string& name) {
  for (Method m : {Method::cmcls, Method::mock_only, Method::full_interp, Method::fh, Method::hermite,
                   Method::rbf_mn, Method::rbf_w2, Method::rbf_imq, Method::rbf_g}) {
    if (name == method_name(m)) return m;
  }
  if (name == "mock") return Method::mock_only;
  throw std::domain_error("unknown method '" + name + "'");
}

// One (method, n) measurement. p is set only for cmcls rows; param carries
// the method-specific parameter that was selected or used (epsilon, d, gamma).
struct ErrorReport {
  Method method = Method::cmcls;
  int n = 0;
  std::optional<int> p;
  double uniform_error = 0.0;
  std::optional<double> two_norm_error;
  std::optional<double> param;
  std::string flag;  // empty on success, short reason on failure
};

struct SweepResult {
  std::string function_name;
  std::string grid_spec;
  std::vector<ErrorReport> rows;
};

struct SweepOptions {
  int grid_size = 10001;
  int jobs = 0;  // 0 = hardware concurrency
  std::vector<double> eps_grid;  // empty = default_eps_grid()
  int d_max = 8;
  double gamma = 1.0;
  int mn_power = 1;
  RegressionBasis basis = RegressionBasis::chebyshev;
};

namespace detail {

inline void sort_rows(std::vector<ErrorReport>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ErrorReport& a, const ErrorReport& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.method != b.method) return static_cast<int>(a.method) < static_cast<int>(b.method);
    return a.p.value_or(-1) < b.p.value_or(-1);
  });
}

// Run fn(0..count-1) on up to `jobs` worker threads. Each index is handled
// exactly once; results must be written to per-index slots by the caller.
// The first exception thrown by fn is rethrown on the calling thread.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Barycentric weights of the full equispaced grid, built from log-binomials
// so they stay representable for any n.
inline std::vector<double> equispaced_lagrange_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  double lmax = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double lw = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
    w[static_cast<std::size_t>(i)] = lw;
    lmax = std::max(lmax, lw);
  }
  for (int i = 0; i <= n; ++i) {
    w[static_cast<std::size_t>(i)] =
        (i % 2 == 0 ? 1.0 : -1.0) * std::exp(w[static_cast<std::size_t>(i)] - lmax);
  }
  return w;
}

inline double bary_eval_with_weights(const std::vector<double>& nodes, const std::vector<double>& values,
                                     const std::vector<double>& weights, double t) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = t - nodes[i];
    if (d == 0.0) return values[i];
    const double q = weights[i] / d;
    num += q * values[i];
    den += q;
  }
  return num / den;
}

inline std::string grid_spec_string(int grid_size) {
  return "uniform[-1,1]x" + std::to_string(grid_size);
}

inline ErrorReport measure_method(Method method, const TestFunction& f, int n,
                                  const std::vector<double>& grid, const std::vector<double>& grid_f,
                                  const SweepOptions& opt) {
  ErrorReport row;
  row.method = method;
  row.n = n;
  auto grid_error = [&](const std::function<double(double)>& approx) {
    double err = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double e = std::abs(approx(grid[k]) - grid_f[k]);
      if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
      err = std::max(err, e);
    }
    return err;
  };
  try {
    const EquispacedGrid g(n);
    std::vector<double> samples(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) samples[static_cast<std::size_t>(i)] = f(g.node(i));

    switch (method) {
      case Method::cmcls: {
        const detail::FitWithNorms fit = detail::fit_full(samples, n, std::nullopt, opt.basis);
        row.p = fit.approximant.p;
        row.two_norm_error = fit.approximant.residual_2norm;
        row.uniform_error = grid_error([&](double t) { return fit.approximant(t); });
        break;
      }
      case Method::mock_only: {
        const NodeSplit split = extract_mock_subset(g);
        std::vector<double> xm(split.mock.size());
        std::vector<double> ym(split.mock.size());
        for (std::size_t k = 0; k < split.mock.size(); ++k) {
          xm[k] = g.node(split.mock[k]);
          ym[k] = samples[static_cast<std::size_t>(split.mock[k])];
        }
        const BarycentricInterpolant interp(std::move(xm), std::move(ym));
        double norm2 = 0.0;
        for (int idx : split.residual) {
          const double r = samples[static_cast<std::size_t>(idx)] - interp(g.node(idx));
          norm2 += r * r;
        }
        row.two_norm_error = std::sqrt(norm2);
        row.uniform_error = grid_error([&](double t) { return interp(t); });
        break;
      }
      case Method::full_interp: {
        const std::vector<double> w = equispaced_lagrange_weights(n);
        row.uniform_error = grid_error(
            [&](double t) { return bary_eval_with_weights(g.nodes(), samples, w, t); });
        break;
      }
      case Method::fh: {
        const BlendingSearchResult best =
            fh_best_d(g.nodes(), samples, std::min(opt.d_max, n), grid, grid_f);
        row.param = best.d;
        row.uniform_error = best.error;
        break;
      }
      case Method::hermite: {
        const HermiteFunctionInterpolant h(g.nodes(), samples, opt.gamma);
        row.param = opt.gamma;
        row.uniform_error = grid_error([&](double t) { return h(t); });
        break;
      }
      case Method::rbf_mn:
      case Method::rbf_w2: {
        const RbfKernel kernel = method == Method::rbf_mn ? RbfKernel::mn : RbfKernel::w2;
        const RbfInterpolant s(kernel, g.nodes(), samples, std::nullopt, opt.mn_power);
        row.uniform_error = grid_error([&](double t) { return s(t); });
        break;
      }
      case Method::rbf_imq:
      case Method::rbf_g: {
        const RbfKernel kernel = method == Method::rbf_imq ? RbfKernel::imq : RbfKernel::g;
        const std::vector<double>& eps = opt.eps_grid;
        const ShapeSearchResult best = rbf_trial_and_error(
            kernel, g.nodes(), samples, eps.empty() ? default_eps_grid() : eps, grid, grid_f,
            opt.mn_power);
        row.param = best.epsilon;
        row.uniform_error = best.error;
        break;
      }
    }
  } catch (const std::exception&) {
    row.uniform_error = std::numeric_limits<double>::infinity();
    row.flag = "failed";
  }
  return row;
}

}  // namespace detail

// Constrained fits for every requested regression degree plus one row for the
// mock-subset interpolant alone.
inline SweepResult p_sweep(const TestFunction& f, int n, const std::vector<int>& p_values,
                           const SweepOptions& opt = {}) {
  SweepResult result;
  result.function_name = f.name;
  result.grid_spec = detail::grid_spec_string(opt.grid_size);
  const std::vector<double> grid = uniform_grid(opt.grid_size);
  std::vector<double> grid_f(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) grid_f[k] = f(grid[k]);

  const EquispacedGrid g(n);
  std::vector<double> samples(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) samples[static_cast<std::size_t>(i)] = f(g.node(i));

  result.rows.resize(p_values.size() + 1);
  detail::parallel_for(p_values.size(), opt.jobs, [&](std::size_t k) {
    const detail::FitWithNorms fit = detail::fit_full(samples, n, p_values[k], opt.basis);
    ErrorReport row;
    row.method = Method::cmcls;
    row.n = n;
    row.p = p_values[k];
    row.two_norm_error = fit.approximant.residual_2norm;
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      err = std::max(err, std::abs(fit.approximant(grid[i]) - grid_f[i]));
    }
    row.uniform_error = err;
    result.rows[k] = std::move(row);
  });
  result.rows.back() = detail::measure_method(Method::mock_only, f, n, grid, grid_f, opt);
  detail::sort_rows(result.rows);
  return result;
}

// One row per (n, method). Method failures are recorded in the row as
// +infinity with a flag; the sweep continues.
inline SweepResult n_sweep(const TestFunction& f, const std::vector<Method>& methods,
                           const std::vector<int>& n_values, const SweepOptions& opt = {}) {
  for (int n : n_values) {
    if (n < 10 || n > 10000) throw std::domain_error("n_sweep: n values must lie in [10, 10000]");
  }
  SweepResult result;
  result.function_name = f.name;
  result.grid_spec = detail::grid_spec_string(opt.grid_size);
  const std::vector<double> grid = uniform_grid(opt.grid_size);
  std::vector<double> grid_f(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) grid_f[k] = f(grid[k]);

  result.rows.resize(n_values.size() * methods.size());
  detail::parallel_for(result.rows.size(), opt.jobs, [&](std::size_t k) {
    const int n = n_values[k / methods.size()];
    const Method method = methods[k % methods.size()];
    result.rows[k] = detail::measure_method(method, f, n, grid, grid_f, opt);
  });
  detail::sort_rows(result.rows);
  return result;
}

// count values of n, logarithmically spaced over [lo, hi], deduplicated.
inline std::vector<int> log_spaced_values(int lo, int hi, int count = 40) {
  if (lo < 1 || hi < lo || count < 1) throw std::domain_error("log_spaced_values: bad range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count));
  const double la = std::log(static_cast<double>(lo));
  const double lb = std::log(static_cast<double>(hi));
  for (int k = 0; k < count; ++k) {
    const double x = count == 1 ? la : la + (lb - la) * k / (count - 1);
    const int n = static_cast<int>(std::lround(std::exp(x)));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

// Validate tabulated (t, f) rows as samples of an equispaced grid on [-1,1]
// and return the grid plus the values ordered by node index.
inline std::pair<EquispacedGrid, std::vector<double>> ingest_samples(
    std::vector<std::pair<double, double>> rows) {
  if (rows.size() < 11) {
    throw std::domain_error("ingest_samples: need at least 11 rows (n >= 10)");
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].first == rows[i + 1].first) {
      throw std::domain_error("ingest_samples: duplicate abscissa t=" + std::to_string(rows[i].first));
    }
  }
  const int n = static_cast<int>(rows.size()) - 1;
  const EquispacedGrid grid(n);
  const double tol = 1e-9 * 2.0;  // relative to the interval length
  double worst = 0.0;
  std::size_t worst_idx = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double dev = std::abs(rows[i].first - grid.node(static_cast<int>(i)));
    if (dev > worst) {
      worst = dev;
      worst_idx = i;
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "ingest_samples: abscissae are not equispaced on [-1,1]: worst offender t="
        << rows[worst_idx].first << " (row " << worst_idx << ", deviation " << worst << ")";
    throw std::domain_error(msg.str());
  }
  std::vector<double> samples(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) samples[i] = rows[i].second;
  return {grid, std::move(samples)};
}

// CSV rows "t,f" with a mandatory header line.
inline std::vector<std::pair<double, double>> parse_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::domain_error("samples csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,f") throw std::domain_error("samples csv: expected header 't,f', got '" + line + "'");
  std::vector<std::pair<double, double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::domain_error("samples csv: missing comma on line " + std::to_string(lineno));
    }
    try {
      std::size_t used = 0;
      const double t = std::stod(line.substr(0, comma), &used);
      const double v = std::stod(line.substr(comma + 1), &used);
      rows.emplace_back(t, v);
    } catch (const std::exception&) {
      throw std::domain_error("samples csv: malformed number on line " + std::to_string(lineno));
    }
  }
  return rows;
}

}  // namespace mockcheb

#endif  // MOCKCHEB_BENCH_HPP
