#include "tfc8/solver.hpp"

#include "tfc8/errors.hpp"
#include "tfc8/lstsq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tfc8 {

namespace {

std::string at(double x) { return " at x=" + std::to_string(x); }

State partials_at(const BvpProblem& problem, double x, const State& y) {
  State p = problem.partials ? problem.partials(x, y)
                             : finite_difference_partials(problem.residual, x, y);
  for (double v : p) {
    if (!std::isfinite(v)) throw EvaluationError("non-finite partial derivative" + at(x));
  }
  return p;
}

double residual_at(const BvpProblem& problem, double x, const State& y) {
  const double r = problem.residual(x, y);
  if (!std::isfinite(r)) throw EvaluationError("non-finite residual" + at(x));
  return r;
}

State state_of(const CeRows& rows, const Eigen::VectorXd& xi) {
  State y{};
  for (int d = 0; d <= kMaxDerivativeOrder; ++d) y[d] = rows.a.row(d).dot(xi) + rows.b[d];
  return y;
}

Eigen::RowVectorXd chain_row(const CeRows& rows, const State& partials) {
  Eigen::RowVectorXd out = Eigen::RowVectorXd::Zero(rows.a.cols());
  for (int d = 0; d <= kMaxDerivativeOrder; ++d) {
    if (partials[d] != 0.0) out += partials[d] * rows.a.row(d);
  }
  return out;
}

void check_problem(const BvpProblem& problem) {
  if (!problem.residual) throw ConfigError("problem '" + problem.name + "' has no residual");
  problem.bc.validate();
}

struct Setup {
  ConstrainedExpression ce;
  CollocationGrid grid;
};

Setup setup(const BvpProblem& problem, const SolverConfig& config) {
  config.validate();
  check_problem(problem);
  const DomainMap map(problem.x_i(), problem.x_f());
  return Setup{build_ce(BasisSet(config.m_basis, map), problem.bc, config.switching_mode),
               make_grid(map, config.n_points)};
}

}  // namespace

State finite_difference_partials(const ResidualFn& residual, double x, const State& y) {
  State out{};
  for (int k = 0; k <= kMaxDerivativeOrder; ++k) {
    const double h = kPartialsFdStep * std::max(1.0, std::abs(y[k]));
    State up = y;
    State down = y;
    up[k] += h;
    down[k] -= h;
    out[k] = (residual(x, up) - residual(x, down)) / (up[k] - down[k]);
  }
  return out;
}

void SolverConfig::validate() const {
  if (n_points < 2) throw ConfigError("n_points must be >= 2, got " + std::to_string(n_points));
  if (m_basis < 1) throw ConfigError("m_basis must be >= 1, got " + std::to_string(m_basis));
  if (m_basis > n_points - 1) {
    throw ConfigError("m_basis (" + std::to_string(m_basis) + ") must not exceed n_points - 1 (" +
                      std::to_string(n_points - 1) + ")");
  }
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (max_iterations < 1) {
    throw ConfigError("max_iterations must be >= 1, got " + std::to_string(max_iterations));
  }
}

std::string_view to_string(ConvergedBy c) {
  switch (c) {
    case ConvergedBy::tolerance: return "tolerance";
    case ConvergedBy::nondecreasing_norm: return "nondecreasing_norm";
    case ConvergedBy::linear_single_shot: return "linear_single_shot";
    case ConvergedBy::max_iterations: return "max_iterations";
  }
  return "unknown";
}

LinearSystem assemble_linear(const BvpProblem& problem, const ConstrainedExpression& ce,
                             const CollocationGrid& grid) {
  if (!problem.is_linear) {
    throw ContractViolation("assemble_linear called on nonlinear problem '" + problem.name + "'");
  }
  const int n = grid.n_points();
  LinearSystem sys{Eigen::MatrixXd(n, ce.m()), Eigen::VectorXd(n)};
  for (int k = 0; k < n; ++k) {
    const double x = grid.x_nodes[k];
    const CeRows rows = ce.rows(x);
    State y0{};
    for (int d = 0; d <= kMaxDerivativeOrder; ++d) y0[d] = rows.b[d];
    sys.a.row(k) = chain_row(rows, partials_at(problem, x, y0));
    sys.b[k] = residual_at(problem, x, y0);
  }
  return sys;
}

LossAndJacobian assemble_loss_and_jacobian(const BvpProblem& problem,
                                           const ConstrainedExpression& ce,
                                           const CollocationGrid& grid,
                                           const Eigen::VectorXd& xi) {
  if (xi.size() != ce.m()) {
    throw ContractViolation("coefficient vector has " + std::to_string(xi.size()) +
                            " entries, expected " + std::to_string(ce.m()));
  }
  const int n = grid.n_points();
  LossAndJacobian out{Eigen::VectorXd(n), Eigen::MatrixXd(n, ce.m())};
  for (int k = 0; k < n; ++k) {
    const double x = grid.x_nodes[k];
    const CeRows rows = ce.rows(x);
    const State y = state_of(rows, xi);
    out.loss[k] = residual_at(problem, x, y);
    out.jacobian.row(k) = chain_row(rows, partials_at(problem, x, y));
  }
  return out;
}

Solution solve_linear(const BvpProblem& problem, const SolverConfig& config) {
  if (!problem.is_linear) {
    throw ContractViolation("solve_linear called on nonlinear problem '" + problem.name + "'");
  }
  Setup s = setup(problem, config);
  const LinearSystem sys = assemble_linear(problem, s.ce, s.grid);

  SolveReport report;
  report.xi = lstsq_scaled_qr(sys.a, -sys.b);
  report.iterations = 1;
  report.residual_norm_history = {sys.b.norm(), (sys.a * report.xi + sys.b).norm()};
  report.converged_by = ConvergedBy::linear_single_shot;
  report.finite_difference_partials = !problem.partials;
  return Solution{std::move(s.ce), std::move(report)};
}

Solution solve_nonlinear(const BvpProblem& problem, const SolverConfig& config,
                         const IterationObserver& observer) {
  Setup s = setup(problem, config);

  SolveReport report;
  report.finite_difference_partials = !problem.partials;
  report.xi = Eigen::VectorXd::Zero(config.m_basis);
  LossAndJacobian current = assemble_loss_and_jacobian(problem, s.ce, s.grid, report.xi);
  double norm = current.loss.norm();
  if (!std::isfinite(norm)) throw EvaluationError("non-finite loss at the initial guess");
  report.residual_norm_history.push_back(norm);

  report.converged_by = ConvergedBy::max_iterations;
  for (int it = 0; it < config.max_iterations; ++it) {
    if (norm < config.epsilon) {
      report.converged_by = ConvergedBy::tolerance;
      break;
    }
    const Eigen::VectorXd delta = lstsq_scaled_qr(current.jacobian, current.loss);
    const Eigen::VectorXd trial_xi = report.xi - delta;
    LossAndJacobian trial;
    double trial_norm = 0.0;
    try {
      trial = assemble_loss_and_jacobian(problem, s.ce, s.grid, trial_xi);
      trial_norm = trial.loss.norm();
    } catch (const EvaluationError&) {
      trial_norm = std::numeric_limits<double>::infinity();
    }
    const bool accepted = trial_norm < norm;
    if (observer) {
      observer(IterationTrace{it, report.xi, current.loss, current.jacobian, delta, accepted});
    }
    if (!accepted) {
      report.converged_by = ConvergedBy::nondecreasing_norm;
      break;
    }
    report.xi = trial_xi;
    current = std::move(trial);
    norm = trial_norm;
    report.residual_norm_history.push_back(norm);
    ++report.iterations;
  }
  if (report.converged_by == ConvergedBy::max_iterations && norm < config.epsilon) {
    report.converged_by = ConvergedBy::tolerance;
  }
  return Solution{std::move(s.ce), std::move(report)};
}

Solution solve(const BvpProblem& problem, const SolverConfig& config) {
  return problem.is_linear ? solve_linear(problem, config) : solve_nonlinear(problem, config);
}

Solution initial_guess(const BvpProblem& problem, const SolverConfig& config) {
  Setup s = setup(problem, config);
  SolveReport report;
  report.xi = Eigen::VectorXd::Zero(config.m_basis);
  report.finite_difference_partials = !problem.partials;
  report.residual_norm_history.push_back(
      assemble_loss_and_jacobian(problem, s.ce, s.grid, report.xi).loss.norm());
  return Solution{std::move(s.ce), std::move(report)};
}

}  // namespace tfc8
