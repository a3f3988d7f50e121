#pragma once

#include "tfc8/solver.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tfc8 {

/// Error of a competing published method at one table point.
struct ReferenceError {
  double x = 0.0;
  double error = 0.0;
};

struct BenchmarkEntry {
  int id = 0;
  BvpProblem problem;
  /// 11 equidistant points spanning the domain.
  std::vector<double> table_points;
  /// Competing-method column of the published error table, for display only.
  std::vector<ReferenceError> reference_errors;

  std::optional<double> reference_error_at(std::size_t row) const;
};

inline constexpr int kNumBenchmarks = 7;

BenchmarkEntry problem_1();
BenchmarkEntry problem_2();
BenchmarkEntry problem_3();
BenchmarkEntry problem_4();
BenchmarkEntry problem_5();
BenchmarkEntry problem_6();
BenchmarkEntry problem_7();

/// problem_<id>() for id in 1..7; ConfigError otherwise.
BenchmarkEntry benchmark(int id);

/// n equidistant points on [x_i, x_f], endpoints exact.
std::vector<double> equidistant_points(double x_i, double x_f, int n);

/// Mean |y^(k)_approx - y^(k)_exact| for k = 0..8 over n_error_points
/// equidistant points, solving with m_basis terms and m_basis + 1 nodes.
std::array<double, 9> derivative_error_report(const BenchmarkEntry& entry, int m_basis,
                                              int n_error_points,
                                              const SolverConfig& base = {});

/// Same, for an already-solved problem.
std::array<double, 9> derivative_error_report(const BvpProblem& problem, const Solution& solution,
                                              int n_error_points);

}  // namespace tfc8
