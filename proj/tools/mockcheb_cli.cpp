// Command-line front end: node-split inspection, single constrained fits,
// degree sweeps, and method comparisons, emitted as CSV or JSON.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mockcheb/bench.hpp"
#include "mockcheb/constrained_lsq.hpp"
#include "mockcheb/grids.hpp"
#include "mockcheb/report_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  std::string function_name;
  std::string input_path;
  std::string format = "csv";
  std::string out_path;
  std::string basis = "chebyshev";
  int grid_size = 10001;
  int jobs = 0;
  int d_max = 8;
  double gamma = 1.0;
  std::string eps_grid_spec;
};

void add_common_flags(CLI::App* cmd, CommonOptions* opt, bool fitting) {
  if (fitting) {
    cmd->add_option("--function", opt->function_name, "named test function f1..f7");
    cmd->add_option("--input", opt->input_path, "CSV file with header t,f holding equispaced samples");
    cmd->add_option("--basis", opt->basis, "regression basis: chebyshev|monomial")
        ->check(CLI::IsMember({"chebyshev", "monomial"}));
    cmd->add_option("--grid-size", opt->grid_size, "evaluation grid size (default 10001)");
    cmd->add_option("--jobs", opt->jobs, "max worker threads (default: all cores)");
    cmd->add_option("--eps-grid", opt->eps_grid_spec, "RBF shape grid as a:b:k (k log-spaced points)");
    cmd->add_option("--d-max", opt->d_max, "largest blending degree swept for fh");
    cmd->add_option("--gamma", opt->gamma, "Hermite damping parameter");
  }
  cmd->add_option("--format", opt->format, "output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt->out_path, "output file (default: stdout)");
}

mockcheb::RegressionBasis basis_from_name(const std::string& name) {
  return name == "monomial" ? mockcheb::RegressionBasis::monomial
                            : mockcheb::RegressionBasis::chebyshev;
}

// "a:b" or "a:b:step" or a single integer.
std::vector<int> parse_int_range(const std::string& spec, bool log_default) {
  std::vector<long> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(std::stol(item));
  if (parts.empty() || parts.size() > 3) throw std::domain_error("bad range '" + spec + "'");
  if (parts.size() == 1) return {static_cast<int>(parts[0])};
  const int a = static_cast<int>(parts[0]);
  const int b = static_cast<int>(parts[1]);
  if (b < a) throw std::domain_error("bad range '" + spec + "': end before start");
  if (parts.size() == 2) {
    if (log_default) return mockcheb::log_spaced_values(a, b, 40);
    std::vector<int> out;
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  const int step = static_cast<int>(parts[2]);
  if (step < 1) throw std::domain_error("bad range '" + spec + "': step must be positive");
  std::vector<int> out;
  for (int v = a; v <= b; v += step) out.push_back(v);
  return out;
}

std::vector<double> parse_eps_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
  if (parts.size() != 3) throw std::domain_error("bad --eps-grid '" + spec + "': expected a:b:k");
  const double a = parts[0];
  const double b = parts[1];
  const int k = static_cast<int>(parts[2]);
  if (!(a > 0.0) || !(b >= a) || k < 1) throw std::domain_error("bad --eps-grid '" + spec + "'");
  std::vector<double> grid(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    grid[static_cast<std::size_t>(i)] =
        k == 1 ? a : std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (k - 1));
  }
  return grid;
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::domain_error("cannot open output file '" + opt.out_path + "'");
  out << text;
}

mockcheb::SweepOptions sweep_options(const CommonOptions& opt) {
  mockcheb::SweepOptions s;
  s.grid_size = opt.grid_size;
  s.jobs = opt.jobs;
  s.d_max = opt.d_max;
  s.gamma = opt.gamma;
  s.basis = basis_from_name(opt.basis);
  if (!opt.eps_grid_spec.empty()) s.eps_grid = parse_eps_grid(opt.eps_grid_spec);
  return s;
}

std::vector<mockcheb::Method> parse_methods(const std::string& spec) {
  std::vector<mockcheb::Method> methods;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) methods.push_back(mockcheb::method_from_name(item));
  }
  if (methods.empty()) throw std::domain_error("empty --methods list");
  return methods;
}

// Samples either from a named function or from a tabulated CSV file.
struct FitInput {
  int n = 0;
  std::vector<double> samples;
  std::optional<mockcheb::TestFunction> function;
};

FitInput load_fit_input(const CommonOptions& opt, std::optional<int> n_flag) {
  const bool has_fn = !opt.function_name.empty();
  const bool has_input = !opt.input_path.empty();
  if (has_fn == has_input) {
    throw std::domain_error("exactly one of --function and --input is required");
  }
  FitInput in;
  if (has_fn) {
    if (!n_flag) throw std::domain_error("--n is required with --function");
    in.n = *n_flag;
    in.function = mockcheb::test_function(opt.function_name);
    const mockcheb::EquispacedGrid grid(in.n);
    in.samples.resize(static_cast<std::size_t>(in.n) + 1);
    for (int i = 0; i <= in.n; ++i) in.samples[static_cast<std::size_t>(i)] = (*in.function)(grid.node(i));
  } else {
    std::ifstream file(opt.input_path);
    if (!file) throw std::domain_error("cannot open input file '" + opt.input_path + "'");
    auto [grid, samples] = mockcheb::ingest_samples(mockcheb::parse_samples_csv(file));
    in.n = grid.n();
    in.samples = std::move(samples);
    if (n_flag && *n_flag != in.n) {
      throw std::domain_error("--n disagrees with the ingested grid (inferred n=" +
                              std::to_string(in.n) + ")");
    }
  }
  return in;
}

int run_nodes(const CommonOptions& opt, int n) {
  const mockcheb::EquispacedGrid grid(n);
  const mockcheb::NodeSplit split = mockcheb::extract_mock_subset(grid);
  emit(opt, mockcheb::nodes_to_csv(grid, split));
  return 0;
}

int run_approx(const CommonOptions& opt, std::optional<int> n_flag, std::optional<int> p_flag) {
  const FitInput in = load_fit_input(opt, n_flag);
  const mockcheb::detail::FitWithNorms fit = mockcheb::detail::fit_full(
      in.samples, in.n, p_flag, basis_from_name(opt.basis));
  const mockcheb::ConstrainedApproximant& a = fit.approximant;

  mockcheb::ApproxReport report;
  report.n = in.n;
  report.m = a.split.m;
  report.p = a.p;
  report.basis = opt.basis;
  report.two_norm_constrained = a.residual_2norm;
  report.two_norm_mock = fit.mock_residual_norm;
  report.omega_log_scale = a.omega.log_scale();
  report.coefficients = a.q.coefficients();
  const mockcheb::EquispacedGrid grid(in.n);
  double node_err = 0.0;
  for (int i = 0; i <= in.n; ++i) {
    node_err = std::max(node_err,
                        std::abs(a(grid.node(i)) - in.samples[static_cast<std::size_t>(i)]));
  }
  report.node_max_error = node_err;
  if (in.function) {
    report.uniform_error =
        mockcheb::uniform_error([&](double t) { return a(t); }, *in.function, opt.grid_size);
  }

  if (opt.format == "json") {
    emit(opt, mockcheb::approx_to_json(report).dump(2) + "\n");
  } else {
    emit(opt, mockcheb::approx_to_csv(report));
  }
  return 0;
}

int run_sweep(const CommonOptions& opt, const mockcheb::SweepResult& sweep) {
  if (opt.format == "json") {
    emit(opt, mockcheb::sweep_to_json(sweep).dump(2) + "\n");
  } else {
    emit(opt, mockcheb::sweep_to_csv(sweep));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained mock-Chebyshev least-squares toolkit"};
  app.require_subcommand(1);

  CommonOptions nodes_opt;
  int nodes_n = 0;
  CLI::App* nodes_cmd = app.add_subcommand("nodes", "emit the node split of an equispaced grid");
  nodes_cmd->add_option("--n", nodes_n, "number of subintervals")->required();
  add_common_flags(nodes_cmd, &nodes_opt, false);

  CommonOptions approx_opt;
  std::optional<int> approx_n;
  std::optional<int> approx_p;
  CLI::App* approx_cmd = app.add_subcommand("approx", "fit one constrained approximant and report it");
  approx_cmd->add_option("--n", approx_n, "number of subintervals (required with --function)");
  approx_cmd->add_option("--p", approx_p, "regression degree (default: degree rule)");
  add_common_flags(approx_cmd, &approx_opt, true);

  CommonOptions psweep_opt;
  int psweep_n = 0;
  std::string psweep_p;
  CLI::App* psweep_cmd = app.add_subcommand("psweep", "sweep the regression degree at fixed n");
  psweep_cmd->add_option("--n", psweep_n, "number of subintervals")->required();
  psweep_cmd->add_option("--p", psweep_p, "degree range a:b[:step] or single value")->required();
  add_common_flags(psweep_cmd, &psweep_opt, true);

  CommonOptions nsweep_opt;
  std::string nsweep_n;
  std::string nsweep_methods = "cmcls,mock_only";
  CLI::App* nsweep_cmd = app.add_subcommand("nsweep", "sweep n for one or more methods");
  nsweep_cmd->add_option("--n", nsweep_n, "range a:b (40 log-spaced) or a:b:step or single value")
      ->required();
  nsweep_cmd->add_option("--methods", nsweep_methods, "comma-separated method list");
  add_common_flags(nsweep_cmd, &nsweep_opt, true);

  CommonOptions compare_opt;
  std::string compare_n;
  std::string compare_methods = "cmcls,rbf_g,rbf_imq,rbf_w2,rbf_mn";
  CLI::App* compare_cmd = app.add_subcommand("compare", "compare methods over a range of n");
  compare_cmd->add_option("--n", compare_n, "range a:b (40 log-spaced) or a:b:step or single value")
      ->required();
  compare_cmd->add_option("--methods", compare_methods, "comma-separated method list");
  add_common_flags(compare_cmd, &compare_opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (nodes_cmd->parsed()) return run_nodes(nodes_opt, nodes_n);
    if (approx_cmd->parsed()) return run_approx(approx_opt, approx_n, approx_p);
    if (psweep_cmd->parsed()) {
      if (psweep_opt.function_name.empty()) {
        throw std::domain_error("psweep needs --function (sweeps require a true function)");
      }
      const mockcheb::TestFunction f = mockcheb::test_function(psweep_opt.function_name);
      const std::vector<int> p_values = parse_int_range(psweep_p, false);
      return run_sweep(psweep_opt, mockcheb::p_sweep(f, psweep_n, p_values, sweep_options(psweep_opt)));
    }
    if (nsweep_cmd->parsed()) {
      if (nsweep_opt.function_name.empty()) {
        throw std::domain_error("nsweep needs --function (sweeps require a true function)");
      }
      const mockcheb::TestFunction f = mockcheb::test_function(nsweep_opt.function_name);
      return run_sweep(nsweep_opt,
                       mockcheb::n_sweep(f, parse_methods(nsweep_methods),
                                         parse_int_range(nsweep_n, true), sweep_options(nsweep_opt)));
    }
    if (compare_cmd->parsed()) {
      if (compare_opt.function_name.empty()) {
        throw std::domain_error("compare needs --function (sweeps require a true function)");
      }
      const mockcheb::TestFunction f = mockcheb::test_function(compare_opt.function_name);
      return run_sweep(compare_opt,
                       mockcheb::n_sweep(f, parse_methods(compare_methods),
                                         parse_int_range(compare_n, true), sweep_options(compare_opt)));
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
