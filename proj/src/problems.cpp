#include "tfc8/problems.hpp"

#include "tfc8/errors.hpp"
#include "tfc8/polynomial.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

namespace tfc8 {

namespace {

constexpr int kTablePoints = 11;
constexpr double kFactorial7 = 5040.0;
const double kE = std::numbers::e;

State constant_partials(std::initializer_list<std::pair<int, double>> entries) {
  State p{};
  for (const auto& [order, value] : entries) p[order] = value;
  return p;
}

// Rows 0..10 of a published competing-method column; nullopt where the table
// says "not reported".
std::vector<ReferenceError> reference_column(const std::vector<double>& points,
                                             const std::array<std::optional<double>, 11>& column) {
  std::vector<ReferenceError> out;
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (column[k]) out.push_back({points[k], *column[k]});
  }
  return out;
}

BenchmarkEntry make_entry(int id, BvpProblem problem,
                          const std::array<std::optional<double>, 11>& column) {
  BenchmarkEntry entry;
  entry.id = id;
  entry.table_points = equidistant_points(problem.x_i(), problem.x_f(), kTablePoints);
  entry.reference_errors = reference_column(entry.table_points, column);
  entry.problem = std::move(problem);
  return entry;
}

// (x^2 - 1) sin x and its derivatives: y^(n) = p_n sin x + q_n cos x with
// p_{n+1} = p_n' - q_n, q_{n+1} = q_n' + p_n.
ExactFn sin_product_exact() {
  auto terms = std::make_shared<std::vector<std::pair<Polynomial, Polynomial>>>();
  Polynomial p{-1.0, 0.0, 1.0};
  Polynomial q{0.0};
  for (int n = 0; n <= kMaxDerivativeOrder; ++n) {
    terms->emplace_back(p, q);
    Polynomial next_p = p.derivative() - q;
    Polynomial next_q = q.derivative() + p;
    p = std::move(next_p);
    q = std::move(next_q);
  }
  return [terms](double x, int order) {
    const auto& [pn, qn] = (*terms)[order];
    return pn(x) * std::sin(x) + qn(x) * std::cos(x);
  };
}

}  // namespace

std::vector<double> equidistant_points(double x_i, double x_f, int n) {
  if (n < 2) throw ConfigError("need at least 2 evaluation points, got " + std::to_string(n));
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = x_i + (x_f - x_i) * k / (n - 1);
  out.front() = x_i;
  out.back() = x_f;
  return out;
}

std::optional<double> BenchmarkEntry::reference_error_at(std::size_t row) const {
  if (row >= table_points.size()) return std::nullopt;
  for (const auto& r : reference_errors) {
    if (r.x == table_points[row]) return r.error;
  }
  return std::nullopt;
}

BenchmarkEntry problem_1() {
  BvpProblem p;
  p.name = "p1";
  p.bc = {0.0, 1.0, {1.0, 0.0, -1.0, -2.0}, {0.0, -kE, -2.0 * kE, -3.0 * kE}};
  p.residual = [](double x, const State& y) { return y[8] - y[0] + 8.0 * std::exp(x); };
  p.partials = [](double, const State&) { return constant_partials({{0, -1.0}, {8, 1.0}}); };
  p.is_linear = true;
  p.exact = [](double x, int order) { return (1.0 - x - order) * std::exp(x); };
  return make_entry(1, std::move(p),
                    {0.0, 6.3e-11, 6.5e-10, 2.0e-09, 3.3e-09, 3.9e-09, 3.4e-09, 2.0e-09, 6.9e-10,
                     7.6e-11, 0.0});
}

BenchmarkEntry problem_2() {
  BvpProblem p;
  p.name = "p2";
  p.bc = {0.0, 1.0, {0.0, 1.0, 0.0, -3.0}, {0.0, -kE, -4.0 * kE, -9.0 * kE}};
  p.residual = [](double x, const State& y) {
    return y[8] + x * y[0] + std::exp(x) * (48.0 + 15.0 * x + x * x * x);
  };
  p.partials = [](double x, const State&) { return constant_partials({{0, x}, {8, 1.0}}); };
  p.is_linear = true;
  // Leibniz on (x - x^2) e^x.
  p.exact = [](double x, int n) {
    return std::exp(x) * ((x - x * x) + n * (1.0 - 2.0 * x) - static_cast<double>(n) * (n - 1));
  };
  return make_entry(2, std::move(p),
                    {0.0, 1.63e-10, 1.63e-09, 4.90e-09, 8.46e-09, 1.01e-08, 8.68e-09, 5.15e-09,
                     1.76e-09, std::nullopt, 0.0});
}

BenchmarkEntry problem_3() {
  const double s1 = std::sin(1.0);
  const double c1 = std::cos(1.0);
  BvpProblem p;
  p.name = "p3";
  // y'(1) = +2 sin(1): the derivative of the exact solution, not the printed sign.
  p.bc = {0.0, 1.0, {0.0, -1.0, 0.0, 7.0}, {0.0, 2.0 * s1, 4.0 * c1 + 2.0 * s1, -6.0 * s1 + 6.0 * c1}};
  p.residual = [](double x, const State& y) {
    return y[8] - y[0] + 8.0 * (2.0 * x * std::cos(x) + 7.0 * std::sin(x));
  };
  p.partials = [](double, const State&) { return constant_partials({{0, -1.0}, {8, 1.0}}); };
  p.is_linear = true;
  p.exact = sin_product_exact();
  return make_entry(3, std::move(p),
                    {0.0, 6.6e-12, 6.9e-11, 2.1e-10, 3.5e-10, 4.1e-10, 3.5e-10, 2.1e-10, 7.2e-11,
                     8.0e-12, 0.0});
}

BenchmarkEntry problem_4() {
  BvpProblem p;
  p.name = "p4";
  p.bc = {0.0, 1.0, {1.0, 1.0, 1.0, 1.0}, {kE, kE, kE, kE}};
  p.residual = [](double x, const State& y) {
    const double ex = std::exp(x);
    return y[8] + y[3] * std::sin(y[0]) - ex * (1.0 + std::sin(ex));
  };
  p.partials = [](double, const State& y) {
    return constant_partials({{0, y[3] * std::cos(y[0])}, {3, std::sin(y[0])}, {8, 1.0}});
  };
  p.is_linear = false;
  p.exact = [](double x, int) { return std::exp(x); };
  return make_entry(4, std::move(p),
                    {0.0, 2.503395e-06, 8.940697e-06, 1.561642e-05, 1.823902e-05, 8.821487e-06,
                     7.510185e-06, 1.883507e-05, 1.931190e-05, 1.168251e-05, 0.0});
}

BenchmarkEntry problem_5() {
  const double x_f = std::exp(0.5) - 1.0;
  BvpProblem p;
  p.name = "p5";
  p.bc = {0.0, x_f, {0.0, 1.0, -1.0, 2.0},
          {0.5, std::exp(-0.5), -std::exp(-1.0), 2.0 * std::exp(-1.5)}};
  p.residual = [](double x, const State& y) {
    return y[8] - kFactorial7 * (std::exp(-8.0 * y[0]) - 2.0 / std::pow(1.0 + x, 8));
  };
  p.partials = [](double, const State& y) {
    return constant_partials({{0, 8.0 * kFactorial7 * std::exp(-8.0 * y[0])}, {8, 1.0}});
  };
  p.is_linear = false;
  p.exact = [](double x, int n) {
    if (n == 0) return std::log1p(x);
    double fact = 1.0;  // (n - 1)!
    for (int i = 2; i < n; ++i) fact *= i;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * fact / std::pow(1.0 + x, n);
  };
  // Published as "5.45-06" in row 8.
  return make_entry(5, std::move(p),
                    {0.0, 2.01e-07, 4.54e-07, 1.52e-06, 4.07e-06, 6.71e-06, 9.06e-06, 1.00e-05,
                     5.45e-06, 2.59e-06, 0.0});
}

BenchmarkEntry problem_6() {
  const double e1 = std::exp(-1.0);
  BvpProblem p;
  p.name = "p6";
  p.bc = {0.0, 1.0, {1.0, -1.0, 1.0, -1.0}, {e1, -e1, e1, -e1}};
  p.residual = [](double x, const State& y) {
    return y[8] + std::exp(-x) * y[0] * y[0] - std::exp(-x) - std::exp(-3.0 * x);
  };
  p.partials = [](double x, const State& y) {
    return constant_partials({{0, 2.0 * std::exp(-x) * y[0]}, {8, 1.0}});
  };
  p.is_linear = false;
  p.exact = [](double x, int n) { return (n % 2 == 0 ? 1.0 : -1.0) * std::exp(-x); };
  return make_entry(6, std::move(p),
                    {0.0, 2.9e-12, 2.7e-11, 7.6e-11, 1.3e-10, 1.5e-10, 1.3e-10, 7.6e-11, 2.5e-11,
                     2.4e-12, 0.0});
}

BenchmarkEntry problem_7() {
  const double s1 = std::sin(1.0);
  const double c1 = std::cos(1.0);
  static constexpr std::array<double, 9> kCoeffs{1.0, 1.0, 2.0, 2.0, 2.0, 2.0, 2.0, 1.0, 1.0};
  BvpProblem p;
  p.name = "p7";
  p.bc = {0.0, 1.0, {0.0, -1.0, 0.0, 7.0}, {0.0, 2.0 * s1, 4.0 * c1 + 2.0 * s1, 6.0 * c1 - 6.0 * s1}};
  p.residual = [](double x, const State& y) {
    double lhs = 0.0;
    for (int d = 0; d <= kMaxDerivativeOrder; ++d) lhs += kCoeffs[d] * y[d];
    return lhs - (14.0 * std::cos(x) - 16.0 * std::sin(x) - 4.0 * x * std::sin(x));
  };
  p.partials = [](double, const State&) { return kCoeffs; };
  p.is_linear = true;
  p.exact = sin_product_exact();
  return make_entry(7, std::move(p), {});
}

BenchmarkEntry benchmark(int id) {
  switch (id) {
    case 1: return problem_1();
    case 2: return problem_2();
    case 3: return problem_3();
    case 4: return problem_4();
    case 5: return problem_5();
    case 6: return problem_6();
    case 7: return problem_7();
    default: throw ConfigError("unknown benchmark problem " + std::to_string(id));
  }
}

std::array<double, 9> derivative_error_report(const BvpProblem& problem, const Solution& solution,
                                              int n_error_points) {
  if (!problem.has_exact()) {
    throw ConfigError("problem '" + problem.name + "' has no exact solution");
  }
  const auto xs = equidistant_points(problem.x_i(), problem.x_f(), n_error_points);
  std::array<double, 9> mean{};
  for (double x : xs) {
    const State y = solution.ce.state(x, solution.report.xi);
    for (int d = 0; d <= kMaxDerivativeOrder; ++d) mean[d] += std::abs(y[d] - problem.exact(x, d));
  }
  for (double& v : mean) v /= static_cast<double>(xs.size());
  return mean;
}

std::array<double, 9> derivative_error_report(const BenchmarkEntry& entry, int m_basis,
                                              int n_error_points, const SolverConfig& base) {
  if (!entry.problem.has_exact()) {
    throw ConfigError("problem '" + entry.problem.name + "' has no exact solution");
  }
  if (n_error_points < 2) {
    throw ConfigError("need at least 2 error points, got " + std::to_string(n_error_points));
  }
  SolverConfig config = base;
  config.m_basis = m_basis;
  config.n_points = m_basis + 1;
  return derivative_error_report(entry.problem, solve(entry.problem, config), n_error_points);
}

}  // namespace tfc8
