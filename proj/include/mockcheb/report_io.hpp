#ifndef MOCKCHEB_REPORT_IO_HPP
#define MOCKCHEB_REPORT_IO_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mockcheb/bench.hpp"
#include "mockcheb/constrained_lsq.hpp"
#include "mockcheb/grids.hpp"

namespace mockcheb {

// Table-style rendering: 8 significant digits, locale-independent.
inline std::string format_sci8(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.7e", v);
  return buf;
}

inline std::string format_full(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::string param_string(const ErrorReport& row) {
  if (!row.param) return "";
  if (row.method == Method::fh) return std::to_string(static_cast<int>(std::lround(*row.param)));
  return format_sci8(*row.param);
}

}  // namespace detail

inline std::string sweep_to_csv(const SweepResult& sweep) {
  std::string out = "n,method,p,param,uniform_error,two_norm_error,flag\n";
  for (const ErrorReport& row : sweep.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += method_name(row.method);
    out += ',';
    if (row.p) out += std::to_string(*row.p);
    out += ',';
    out += detail::param_string(row);
    out += ',';
    out += format_sci8(row.uniform_error);
    out += ',';
    if (row.two_norm_error) out += format_sci8(*row.two_norm_error);
    out += ',';
    out += row.flag;
    out += '\n';
  }
  return out;
}

inline nlohmann::json sweep_to_json(const SweepResult& sweep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ErrorReport& row : sweep.rows) {
    nlohmann::json r{{"n", row.n},
                     {"method", method_name(row.method)},
                     {"uniform_error", row.uniform_error},
                     {"flag", row.flag}};
    r["p"] = row.p ? nlohmann::json(*row.p) : nlohmann::json(nullptr);
    r["param"] = row.param ? nlohmann::json(*row.param) : nlohmann::json(nullptr);
    r["two_norm_error"] =
        row.two_norm_error ? nlohmann::json(*row.two_norm_error) : nlohmann::json(nullptr);
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"function", sweep.function_name},
                        {"grid_spec", sweep.grid_spec},
                        {"rows", std::move(rows)}};
}

inline SweepResult sweep_from_json(const nlohmann::json& j) {
  SweepResult sweep;
  sweep.function_name = j.at("function").get<std::string>();
  sweep.grid_spec = j.at("grid_spec").get<std::string>();
  for (const nlohmann::json& r : j.at("rows")) {
    ErrorReport row;
    row.n = r.at("n").get<int>();
    row.method = method_from_name(r.at("method").get<std::string>());
    row.uniform_error = r.at("uniform_error").get<double>();
    row.flag = r.at("flag").get<std::string>();
    if (!r.at("p").is_null()) row.p = r.at("p").get<int>();
    if (!r.at("param").is_null()) row.param = r.at("param").get<double>();
    if (!r.at("two_norm_error").is_null()) row.two_norm_error = r.at("two_norm_error").get<double>();
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

inline std::string nodes_to_csv(const EquispacedGrid& grid, const NodeSplit& split) {
  std::string out = "index,x,role\n";
  for (int i = 0; i <= grid.n(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_full(grid.node(i));
    out += ',';
    out += split.is_mock(i) ? "mock" : "residual";
    out += '\n';
  }
  return out;
}

// Single-fit report. uniform_error is absent when the target function is only
// known through its samples; node_max_error is always measured on the grid
// nodes themselves.
struct ApproxReport {
  int n = 0;
  int m = 0;
  int p = 0;
  std::string basis;
  std::optional<double> uniform_error;
  double node_max_error = 0.0;
  double two_norm_constrained = 0.0;
  double two_norm_mock = 0.0;
  double omega_log_scale = 0.0;
  std::vector<double> coefficients;  // Chebyshev coefficients of the regression polynomial
};

inline nlohmann::json approx_to_json(const ApproxReport& r) {
  return nlohmann::json{
      {"n", r.n},
      {"m", r.m},
      {"p", r.p},
      {"basis", r.basis},
      {"uniform_error", r.uniform_error ? nlohmann::json(*r.uniform_error) : nlohmann::json(nullptr)},
      {"node_max_error", r.node_max_error},
      {"two_norm_constrained", r.two_norm_constrained},
      {"two_norm_mock", r.two_norm_mock},
      {"omega_log_scale", r.omega_log_scale},
      {"coefficients", r.coefficients}};
}

inline std::string approx_to_csv(const ApproxReport& r) {
  std::string out =
      "n,m,p,basis,uniform_error,node_max_error,two_norm_constrained,two_norm_mock,omega_log_scale,"
      "coefficients\n";
  out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.p) + ',' + r.basis + ',';
  if (r.uniform_error) out += format_sci8(*r.uniform_error);
  out += ',' + format_sci8(r.node_max_error) + ',' + format_sci8(r.two_norm_constrained) + ',' +
         format_sci8(r.two_norm_mock) + ',' + format_sci8(r.omega_log_scale) + ',';
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    if (i) out += ' ';
    out += format_full(r.coefficients[i]);
  }
  out += '\n';
  return out;
}

}  // namespace mockcheb

#endif  // MOCKCHEB_REPORT_IO_HPP
