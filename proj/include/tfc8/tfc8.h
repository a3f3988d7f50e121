/* C interface to the tfc8 eighth-order boundary-value solver. */
#ifndef TFC8_TFC8_H
#define TFC8_TFC8_H

#include <stddef.h>

#if defined(TFC8_BUILDING_LIBRARY)
#define TFC8_API __attribute__((visibility("default")))
#else
#define TFC8_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tfc8_status {
  TFC8_OK = 0,
  TFC8_ERR_CONFIG = 1,      /* invalid configuration or arguments */
  TFC8_ERR_CONTRACT = 2,    /* precondition violated (order, domain, size) */
  TFC8_ERR_SINGULAR = 3,    /* rank-deficient least-squares system */
  TFC8_ERR_EVALUATION = 4,  /* residual or partial returned a non-finite value */
  TFC8_ERR_INTERNAL = 5
} tfc8_status;

typedef enum tfc8_switching_mode {
  TFC8_SWITCHING_CLOSED_FORM = 0,
  TFC8_SWITCHING_LINEAR_SOLVE = 1
} tfc8_switching_mode;

typedef enum tfc8_converged_by {
  TFC8_CONVERGED_TOLERANCE = 0,
  TFC8_CONVERGED_NONDECREASING_NORM = 1,
  TFC8_CONVERGED_LINEAR_SINGLE_SHOT = 2,
  TFC8_CONVERGED_MAX_ITERATIONS = 3
} tfc8_converged_by;

typedef struct tfc8_solver_config {
  int n_points;
  int m_basis;
  double epsilon;
  int max_iterations;
  tfc8_switching_mode switching_mode;
} tfc8_solver_config;

typedef struct tfc8_problem tfc8_problem;
typedef struct tfc8_solution tfc8_solution;

/* y[0..8] holds y, y', ..., y^(8). Callbacks must be pure. */
typedef double (*tfc8_residual_fn)(double x, const double* y, void* user_data);
/* Writes dF/dy^(k), k = 0..8, to out. */
typedef void (*tfc8_partials_fn)(double x, const double* y, double* out, void* user_data);

/* Message for the last failing call on this thread; never NULL. */
TFC8_API const char* tfc8_last_error(void);
TFC8_API const char* tfc8_status_name(tfc8_status status);
TFC8_API const char* tfc8_converged_by_name(tfc8_converged_by reason);

TFC8_API void tfc8_default_config(tfc8_solver_config* config);

/* Benchmark problems 1..7. */
TFC8_API tfc8_status tfc8_benchmark_create(int id, tfc8_problem** out);

/* A user-defined problem. partials may be NULL (central finite differences). */
TFC8_API tfc8_status tfc8_problem_create(const char* name, double x_i, double x_f,
                                         const double left_values[4],
                                         const double right_values[4], int is_linear,
                                         tfc8_residual_fn residual, tfc8_partials_fn partials,
                                         void* user_data, tfc8_problem** out);
TFC8_API void tfc8_problem_destroy(tfc8_problem* problem);

TFC8_API const char* tfc8_problem_name(const tfc8_problem* problem);
TFC8_API tfc8_status tfc8_problem_domain(const tfc8_problem* problem, double* x_i, double* x_f);
TFC8_API int tfc8_problem_is_linear(const tfc8_problem* problem);
TFC8_API int tfc8_problem_has_exact(const tfc8_problem* problem);
TFC8_API tfc8_status tfc8_problem_exact(const tfc8_problem* problem, double x, int order,
                                        double* out);
/* Number of rows in the published error table (0 for user problems). */
TFC8_API size_t tfc8_problem_table_size(const tfc8_problem* problem);
TFC8_API tfc8_status tfc8_problem_table_point(const tfc8_problem* problem, size_t row,
                                              double* x);
/* *has_value = 0 when the published table has no competing value for row. */
TFC8_API tfc8_status tfc8_problem_reference_error(const tfc8_problem* problem, size_t row,
                                                  double* error, int* has_value);

/* Linear problems take one least-squares shot; nonlinear ones iterate. */
TFC8_API tfc8_status tfc8_solve(const tfc8_problem* problem, const tfc8_solver_config* config,
                                tfc8_solution** out);
TFC8_API void tfc8_solution_destroy(tfc8_solution* solution);

TFC8_API tfc8_status tfc8_solution_eval(const tfc8_solution* solution, double x, int order,
                                        double* out);
TFC8_API int tfc8_solution_iterations(const tfc8_solution* solution);
TFC8_API tfc8_converged_by tfc8_solution_converged_by(const tfc8_solution* solution);
TFC8_API double tfc8_solution_final_residual_norm(const tfc8_solution* solution);
TFC8_API int tfc8_solution_used_fd_partials(const tfc8_solution* solution);
/* Copies up to capacity coefficients; *count receives the total. */
TFC8_API tfc8_status tfc8_solution_coefficients(const tfc8_solution* solution, double* out,
                                                size_t capacity, size_t* count);

/* Mean absolute error of y, y', ..., y^(8) over n_error_points equidistant
   points after solving with m_basis terms on m_basis + 1 nodes. */
TFC8_API tfc8_status tfc8_derivative_error_report(const tfc8_problem* problem,
                                                  const tfc8_solver_config* config, int m_basis,
                                                  int n_error_points, double out[9]);

#ifdef __cplusplus
}
#endif

#endif /* TFC8_TFC8_H */
