#include "tfc8/tfc8.h"

#include "tfc8/errors.hpp"
#include "tfc8/problems.hpp"
#include "tfc8/solver.hpp"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

struct tfc8_problem {
  tfc8::BenchmarkEntry entry;
};

struct tfc8_solution {
  tfc8::Solution solution;
};

namespace {

thread_local std::string g_last_error;

tfc8_status fail(tfc8_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
tfc8_status guarded(F&& body) {
  try {
    body();
    return TFC8_OK;
  } catch (const tfc8::ConfigError& e) {
    return fail(TFC8_ERR_CONFIG, e.what());
  } catch (const tfc8::ContractViolation& e) {
    return fail(TFC8_ERR_CONTRACT, e.what());
  } catch (const tfc8::SingularSystemError& e) {
    return fail(TFC8_ERR_SINGULAR, e.what());
  } catch (const tfc8::EvaluationError& e) {
    return fail(TFC8_ERR_EVALUATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TFC8_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TFC8_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TFC8_ERR_INTERNAL, "unknown error");
  }
}

tfc8::SolverConfig to_config(const tfc8_solver_config* c) {
  tfc8::SolverConfig config;
  if (c == nullptr) return config;
  config.n_points = c->n_points;
  config.m_basis = c->m_basis;
  config.epsilon = c->epsilon;
  config.max_iterations = c->max_iterations;
  switch (c->switching_mode) {
    case TFC8_SWITCHING_CLOSED_FORM: config.switching_mode = tfc8::SwitchingMode::closed_form; break;
    case TFC8_SWITCHING_LINEAR_SOLVE: config.switching_mode = tfc8::SwitchingMode::linear_solve; break;
    default: throw tfc8::ConfigError("unknown switching mode");
  }
  return config;
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw tfc8::ContractViolation(std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* tfc8_last_error(void) { return g_last_error.c_str(); }

const char* tfc8_status_name(tfc8_status status) {
  switch (status) {
    case TFC8_OK: return "ok";
    case TFC8_ERR_CONFIG: return "configuration error";
    case TFC8_ERR_CONTRACT: return "contract violation";
    case TFC8_ERR_SINGULAR: return "singular system";
    case TFC8_ERR_EVALUATION: return "evaluation error";
    case TFC8_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tfc8_converged_by_name(tfc8_converged_by reason) {
  switch (reason) {
    case TFC8_CONVERGED_TOLERANCE: return "tolerance";
    case TFC8_CONVERGED_NONDECREASING_NORM: return "nondecreasing_norm";
    case TFC8_CONVERGED_LINEAR_SINGLE_SHOT: return "linear_single_shot";
    case TFC8_CONVERGED_MAX_ITERATIONS: return "max_iterations";
  }
  return "unknown";
}

void tfc8_default_config(tfc8_solver_config* config) {
  if (config == nullptr) return;
  const tfc8::SolverConfig d;
  config->n_points = d.n_points;
  config->m_basis = d.m_basis;
  config->epsilon = d.epsilon;
  config->max_iterations = d.max_iterations;
  config->switching_mode = TFC8_SWITCHING_CLOSED_FORM;
}

tfc8_status tfc8_benchmark_create(int id, tfc8_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new tfc8_problem{tfc8::benchmark(id)};
  });
}

tfc8_status tfc8_problem_create(const char* name, double x_i, double x_f,
                                const double left_values[4], const double right_values[4],
                                int is_linear, tfc8_residual_fn residual,
                                tfc8_partials_fn partials, void* user_data, tfc8_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(left_values, "left_values");
    require(right_values, "right_values");
    if (residual == nullptr) throw tfc8::ConfigError("residual callback must not be NULL");

    tfc8::BvpProblem p;
    p.name = name != nullptr ? name : "custom";
    p.bc.x_i = x_i;
    p.bc.x_f = x_f;
    std::copy_n(left_values, 4, p.bc.left_values.begin());
    std::copy_n(right_values, 4, p.bc.right_values.begin());
    p.bc.validate();
    p.is_linear = is_linear != 0;
    p.residual = [residual, user_data](double x, const tfc8::State& y) {
      return residual(x, y.data(), user_data);
    };
    if (partials != nullptr) {
      p.partials = [partials, user_data](double x, const tfc8::State& y) {
        tfc8::State out{};
        partials(x, y.data(), out.data(), user_data);
        return out;
      };
    }
    tfc8::BenchmarkEntry entry;
    entry.problem = std::move(p);
    *out = new tfc8_problem{std::move(entry)};
  });
}

void tfc8_problem_destroy(tfc8_problem* problem) { delete problem; }

const char* tfc8_problem_name(const tfc8_problem* problem) {
  return problem != nullptr ? problem->entry.problem.name.c_str() : "";
}

tfc8_status tfc8_problem_domain(const tfc8_problem* problem, double* x_i, double* x_f) {
  return guarded([&] {
    require(problem, "problem");
    if (x_i != nullptr) *x_i = problem->entry.problem.x_i();
    if (x_f != nullptr) *x_f = problem->entry.problem.x_f();
  });
}

int tfc8_problem_is_linear(const tfc8_problem* problem) {
  return problem != nullptr && problem->entry.problem.is_linear ? 1 : 0;
}

int tfc8_problem_has_exact(const tfc8_problem* problem) {
  return problem != nullptr && problem->entry.problem.has_exact() ? 1 : 0;
}

tfc8_status tfc8_problem_exact(const tfc8_problem* problem, double x, int order, double* out) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    if (!problem->entry.problem.has_exact()) {
      throw tfc8::ConfigError("problem has no exact solution");
    }
    if (order < 0 || order > tfc8::kMaxDerivativeOrder) {
      throw tfc8::ContractViolation("derivative order must be in [0, 8]");
    }
    *out = problem->entry.problem.exact(x, order);
  });
}

size_t tfc8_problem_table_size(const tfc8_problem* problem) {
  return problem != nullptr ? problem->entry.table_points.size() : 0;
}

tfc8_status tfc8_problem_table_point(const tfc8_problem* problem, size_t row, double* x) {
  return guarded([&] {
    require(problem, "problem");
    require(x, "x");
    if (row >= problem->entry.table_points.size()) {
      throw tfc8::ContractViolation("table row out of range");
    }
    *x = problem->entry.table_points[row];
  });
}

tfc8_status tfc8_problem_reference_error(const tfc8_problem* problem, size_t row, double* error,
                                         int* has_value) {
  return guarded([&] {
    require(problem, "problem");
    require(has_value, "has_value");
    if (row >= problem->entry.table_points.size()) {
      throw tfc8::ContractViolation("table row out of range");
    }
    const auto ref = problem->entry.reference_error_at(row);
    *has_value = ref ? 1 : 0;
    if (ref && error != nullptr) *error = *ref;
  });
}

tfc8_status tfc8_solve(const tfc8_problem* problem, const tfc8_solver_config* config,
                       tfc8_solution** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(problem, "problem");
    *out = new tfc8_solution{tfc8::solve(problem->entry.problem, to_config(config))};
  });
}

void tfc8_solution_destroy(tfc8_solution* solution) { delete solution; }

tfc8_status tfc8_solution_eval(const tfc8_solution* solution, double x, int order, double* out) {
  return guarded([&] {
    require(solution, "solution");
    require(out, "out");
    *out = solution->solution.value(x, order);
  });
}

int tfc8_solution_iterations(const tfc8_solution* solution) {
  return solution != nullptr ? solution->solution.report.iterations : 0;
}

tfc8_converged_by tfc8_solution_converged_by(const tfc8_solution* solution) {
  if (solution == nullptr) return TFC8_CONVERGED_MAX_ITERATIONS;
  switch (solution->solution.report.converged_by) {
    case tfc8::ConvergedBy::tolerance: return TFC8_CONVERGED_TOLERANCE;
    case tfc8::ConvergedBy::nondecreasing_norm: return TFC8_CONVERGED_NONDECREASING_NORM;
    case tfc8::ConvergedBy::linear_single_shot: return TFC8_CONVERGED_LINEAR_SINGLE_SHOT;
    case tfc8::ConvergedBy::max_iterations: return TFC8_CONVERGED_MAX_ITERATIONS;
  }
  return TFC8_CONVERGED_MAX_ITERATIONS;
}

double tfc8_solution_final_residual_norm(const tfc8_solution* solution) {
  return solution != nullptr ? solution->solution.report.final_residual_norm() : 0.0;
}

int tfc8_solution_used_fd_partials(const tfc8_solution* solution) {
  return solution != nullptr && solution->solution.report.finite_difference_partials ? 1 : 0;
}

tfc8_status tfc8_solution_coefficients(const tfc8_solution* solution, double* out,
                                       size_t capacity, size_t* count) {
  return guarded([&] {
    require(solution, "solution");
    const auto& xi = solution->solution.report.xi;
    const auto total = static_cast<size_t>(xi.size());
    if (count != nullptr) *count = total;
    if (out != nullptr) std::copy_n(xi.data(), std::min(total, capacity), out);
  });
}

tfc8_status tfc8_derivative_error_report(const tfc8_problem* problem,
                                         const tfc8_solver_config* config, int m_basis,
                                         int n_error_points, double out[9]) {
  return guarded([&] {
    require(problem, "problem");
    require(out, "out");
    const auto report =
        tfc8::derivative_error_report(problem->entry, m_basis, n_error_points, to_config(config));
    std::copy(report.begin(), report.end(), out);
  });
}

}  // extern "C"
