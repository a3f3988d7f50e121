#pragma once

#include "tfc8/basis.hpp"
#include "tfc8/ce.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfc8 {

/// y, y', ..., y^(8) at one point.
using State = std::array<double, 9>;

using ResidualFn = std::function<double(double x, const State& y)>;
using PartialsFn = std::function<State(double x, const State& y)>;
using ExactFn = std::function<double(double x, int order)>;

/// F(x, y, ..., y^(8)) = 0 with the forcing moved inside F. Functions must be pure.
struct BvpProblem {
  std::string name;
  BoundaryConditions bc;
  ResidualFn residual;
  /// dF/dy^(k), k = 0..8. Left empty, central finite differences are used.
  PartialsFn partials;
  bool is_linear = false;
  ExactFn exact;

  double x_i() const { return bc.x_i; }
  double x_f() const { return bc.x_f; }
  bool has_exact() const { return static_cast<bool>(exact); }
};

/// Step used for finite-difference partials.
inline constexpr double kPartialsFdStep = 1e-7;

/// Central-difference dF/dy^(k).
State finite_difference_partials(const ResidualFn& residual, double x, const State& y);

struct SolverConfig {
  int n_points = 11;
  int m_basis = 10;
  double epsilon = 4.4409e-16;
  int max_iterations = 20;
  SwitchingMode switching_mode = SwitchingMode::closed_form;

  /// Throws ConfigError on m_basis > n_points - 1, epsilon <= 0, ...
  void validate() const;
};

enum class ConvergedBy { tolerance, nondecreasing_norm, linear_single_shot, max_iterations };

std::string_view to_string(ConvergedBy c);

struct SolveReport {
  Eigen::VectorXd xi;
  /// Gauss-Newton updates folded into xi (1 for the linear path).
  int iterations = 0;
  /// L2 norm of the loss at xi_0, xi_1, ..., for accepted iterates only.
  std::vector<double> residual_norm_history;
  ConvergedBy converged_by = ConvergedBy::max_iterations;
  bool finite_difference_partials = false;

  double final_residual_norm() const { return residual_norm_history.back(); }
  /// True unless the iteration cap was hit.
  bool converged() const { return converged_by != ConvergedBy::max_iterations; }
};

/// A solved problem: the constrained expression plus its coefficients.
struct Solution {
  ConstrainedExpression ce;
  SolveReport report;

  double value(double x, int order = 0) const { return ce.eval(x, order, report.xi); }
};

struct LinearSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
};

/// A xi + b = 0 at the grid nodes. Partials are taken at the xi = 0 state.
LinearSystem assemble_linear(const BvpProblem& problem, const ConstrainedExpression& ce,
                             const CollocationGrid& grid);

struct LossAndJacobian {
  Eigen::VectorXd loss;
  Eigen::MatrixXd jacobian;
};

LossAndJacobian assemble_loss_and_jacobian(const BvpProblem& problem,
                                           const ConstrainedExpression& ce,
                                           const CollocationGrid& grid, const Eigen::VectorXd& xi);

/// One Gauss-Newton step as seen by an observer.
struct IterationTrace {
  int iteration = 0;
  Eigen::VectorXd xi;
  Eigen::VectorXd loss;
  Eigen::MatrixXd jacobian;
  Eigen::VectorXd delta;
  /// False when the step failed to lower the loss norm and was discarded.
  bool accepted = false;
};

using IterationObserver = std::function<void(const IterationTrace&)>;

Solution solve_linear(const BvpProblem& problem, const SolverConfig& config = {});

/// Gauss-Newton from xi_0 = 0. Stops on ||L|| < epsilon, on a non-decreasing
/// norm (keeping the iterate before it), or at max_iterations.
Solution solve_nonlinear(const BvpProblem& problem, const SolverConfig& config = {},
                         const IterationObserver& observer = {});

/// Dispatches on problem.is_linear.
Solution solve(const BvpProblem& problem, const SolverConfig& config = {});

/// The xi = 0 constrained expression (the interpolating polynomial of the constraints).
Solution initial_guess(const BvpProblem& problem, const SolverConfig& config = {});

}  // namespace tfc8
