// Command-line front end: solves the benchmark problems through the C API and
// prints error tables as aligned text or CSV.
#include "tfc8/tfc8.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum class Format { table, csv };

struct RunConfig {
  std::string problem = "all";
  int n_points = 11;
  int m_basis = 10;
  double epsilon = 4.4409e-16;
  int max_iterations = 20;
  Format format = Format::table;
  bool derivative_report = false;
  int error_points = 11;
  std::string out_path;
};

struct ProblemDeleter {
  void operator()(tfc8_problem* p) const { tfc8_problem_destroy(p); }
};
struct SolutionDeleter {
  void operator()(tfc8_solution* s) const { tfc8_solution_destroy(s); }
};
using ProblemPtr = std::unique_ptr<tfc8_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<tfc8_solution, SolutionDeleter>;

/// 16 significant digits.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::string padded(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Exit codes: 0 success, 1 solver failure, 2 usage / configuration error.
struct Outcome {
  std::string report;
  std::string error;
  int exit_code = 0;
};

Outcome failure(tfc8_status status, const std::string& problem) {
  Outcome o;
  o.error = "error: " + problem + ": " + tfc8_status_name(status) + ": " + tfc8_last_error() + "\n";
  o.exit_code = status == TFC8_ERR_CONFIG ? 2 : 1;
  return o;
}

Outcome run_problem(int id, const RunConfig& cfg) {
  const std::string label = "p" + std::to_string(id);
  tfc8_problem* raw_problem = nullptr;
  if (auto st = tfc8_benchmark_create(id, &raw_problem); st != TFC8_OK) return failure(st, label);
  ProblemPtr problem(raw_problem);

  tfc8_solver_config sc;
  tfc8_default_config(&sc);
  sc.n_points = cfg.n_points;
  sc.m_basis = cfg.m_basis;
  sc.epsilon = cfg.epsilon;
  sc.max_iterations = cfg.max_iterations;

  tfc8_solution* raw_solution = nullptr;
  if (auto st = tfc8_solve(problem.get(), &sc, &raw_solution); st != TFC8_OK) {
    return failure(st, label);
  }
  SolutionPtr solution(raw_solution);

  double x_i = 0.0, x_f = 0.0;
  tfc8_problem_domain(problem.get(), &x_i, &x_f);
  const bool linear = tfc8_problem_is_linear(problem.get()) != 0;
  const tfc8_converged_by reason = tfc8_solution_converged_by(solution.get());
  const bool csv = cfg.format == Format::csv;
  const std::string meta = csv ? "# " : "";

  std::ostringstream os;
  os << meta << "problem: " << label << " (" << (linear ? "linear" : "nonlinear") << ") on ["
     << num(x_i) << ", " << num(x_f) << "]\n";
  os << meta << "n_points: " << cfg.n_points << "  m_basis: " << cfg.m_basis << "\n";
  os << meta << "iterations: " << tfc8_solution_iterations(solution.get()) << "\n";
  os << meta << "converged_by: " << tfc8_converged_by_name(reason) << "\n";
  os << meta << "final_residual_norm: " << num(tfc8_solution_final_residual_norm(solution.get()))
     << "\n";

  // The error grid is equidistant and independent of the collocation nodes.
  const int n = cfg.error_points;
  const std::size_t table_rows = tfc8_problem_table_size(problem.get());
  const bool has_exact = tfc8_problem_has_exact(problem.get()) != 0;
  constexpr std::size_t kWidth = 24;
  if (csv) {
    os << "x,tfc,exact,abs_error,reference_error\n";
  } else {
    os << padded("x", kWidth) << padded("tfc", kWidth) << padded("exact", kWidth)
       << padded("abs_error", kWidth) << padded("reference_error", kWidth) << "\n";
  }
  for (int k = 0; k < n; ++k) {
    double x = x_i + (x_f - x_i) * k / (n - 1);
    if (k == 0) x = x_i;
    if (k == n - 1) x = x_f;
    double y = 0.0;
    if (auto st = tfc8_solution_eval(solution.get(), x, 0, &y); st != TFC8_OK) {
      return failure(st, label);
    }
    double exact = NAN;
    if (has_exact) tfc8_problem_exact(problem.get(), x, 0, &exact);
    const double err = std::abs(y - exact);

    std::string ref;
    if (static_cast<std::size_t>(n) == table_rows) {
      double r = 0.0;
      int has = 0;
      tfc8_problem_reference_error(problem.get(), static_cast<std::size_t>(k), &r, &has);
      if (has) ref = num(r);
    }
    if (csv) {
      os << num(x) << ',' << num(y) << ',' << num(exact) << ',' << num(err) << ',' << ref << '\n';
    } else {
      os << padded(num(x), kWidth) << padded(num(y), kWidth) << padded(num(exact), kWidth)
         << padded(num(err), kWidth) << padded(ref.empty() ? "-" : ref, kWidth) << "\n";
    }
  }

  if (cfg.derivative_report) {
    double report[9];
    if (auto st = tfc8_derivative_error_report(problem.get(), &sc, cfg.m_basis, cfg.error_points,
                                               report);
        st != TFC8_OK) {
      return failure(st, label);
    }
    os << "\n" << meta << "derivative report: m_basis=" << cfg.m_basis
       << " error_points=" << cfg.error_points << "\n";
    if (csv) {
      os << "order,mean_abs_error\n";
    } else {
      os << padded("order", 8) << padded("mean_abs_error", kWidth) << "\n";
    }
    for (int d = 0; d < 9; ++d) {
      if (csv) {
        os << d << ',' << num(report[d]) << '\n';
      } else {
        os << padded(std::to_string(d), 8) << padded(num(report[d]), kWidth) << "\n";
      }
    }
  }

  Outcome o;
  o.report = os.str();
  if (reason == TFC8_CONVERGED_MAX_ITERATIONS) {
    o.exit_code = 1;
    o.error = "error: " + label + ": hit the iteration cap without converging\n";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eighth-order boundary-value problems solved by constrained expressions, "
               "Chebyshev collocation and least squares"};
  RunConfig cfg;
  std::string format = "table";

  app.add_option("--problem", cfg.problem, "Benchmark to solve")
      ->check(CLI::IsMember({"p1", "p2", "p3", "p4", "p5", "p6", "p7", "all"}))
      ->capture_default_str();
  auto* n_opt = app.add_option("--n-points", cfg.n_points, "Collocation points (total)")
                    ->capture_default_str();
  app.add_option("--m-basis", cfg.m_basis, "Chebyshev basis terms")->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "Gauss-Newton loss tolerance")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iterations, "Gauss-Newton iteration cap")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  app.add_flag("--derivative-report", cfg.derivative_report,
               "Append mean absolute errors of y, y', ..., y^(8)");
  app.add_option("--error-points", cfg.error_points, "Equidistant error-evaluation points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "csv" ? Format::csv : Format::table;
  // Square-or-overdetermined by default when only the basis size is given.
  if (n_opt->count() == 0) cfg.n_points = cfg.m_basis + 1;

  std::vector<int> ids;
  if (cfg.problem == "all") {
    for (int id = 1; id <= 7; ++id) ids.push_back(id);
  } else {
    ids.push_back(std::stoi(cfg.problem.substr(1)));
  }

  std::vector<std::future<Outcome>> jobs;
  for (int id : ids) jobs.push_back(std::async(std::launch::async, run_problem, id, cfg));

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out_path << " for writing\n";
      return 2;
    }
  }
  std::ostream& out = cfg.out_path.empty() ? std::cout : file;

  int exit_code = 0;
  bool first = true;
  for (auto& job : jobs) {
    const Outcome o = job.get();
    std::cerr << o.error;
    exit_code = std::max(exit_code, o.exit_code);
    if (o.report.empty()) continue;
    if (!first) out << "\n";
    out << o.report;
    first = false;
  }
  return exit_code;
}
