#pragma once

#include "tfc8/basis.hpp"

#include <Eigen/Dense>

#include <array>

namespace tfc8 {

inline constexpr int kNumConstraints = 8;

using Matrix8d = Eigen::Matrix<double, kNumConstraints, kNumConstraints>;
using Vector8d = Eigen::Matrix<double, kNumConstraints, 1>;

/// Values and derivatives of orders 0..3 prescribed at both ends of [x_i, x_f].
struct BoundaryConditions {
  double x_i = 0.0;
  double x_f = 1.0;
  std::array<double, 4> left_values{};
  std::array<double, 4> right_values{};

  /// Throws ConfigError unless x_f > x_i and every value is finite.
  void validate() const;

  /// Constraint values in canonical order (see constraint_location).
  Vector8d ordered_values() const;
};

/// Canonical constraint k sits at x_i (k even) or x_f (k odd) on derivative
/// order k / 2: (x_i,0), (x_f,0), (x_i,1), (x_f,1), ..., (x_f,3).
inline constexpr int constraint_order(int k) { return k / 2; }
inline constexpr bool constraint_at_left(int k) { return k % 2 == 0; }

enum class SwitchingMode { closed_form, linear_solve };

/// The eight degree-7 switching polynomials, stored as monomial coefficients.
class SwitchingFunctionSet {
 public:
  SwitchingFunctionSet(const Matrix8d& coeffs, double x_i, double x_f);

  /// Row j holds the ascending-degree coefficients of beta_{j+1}.
  const Matrix8d& coeffs() const { return coeffs_; }
  double x_i() const { return x_i_; }
  double x_f() const { return x_f_; }

  /// order-th derivative of every switching function at x. At a constraint
  /// location (x == x_i or x_f, order <= 3) this is the exact unit vector.
  Vector8d eval(double x, int order) const;

  /// Plain Horner evaluation of the stored coefficients, no endpoint snapping.
  Vector8d eval_polynomial(double x, int order) const;

  /// K(k, j) = beta_j^{(d_k)}(x_k) from the stored coefficients; the identity
  /// up to rounding for a valid set.
  Matrix8d kronecker_matrix() const;

 private:
  Matrix8d coeffs_;
  double x_i_;
  double x_f_;
};

/// Expands the general-domain closed forms into monomial coefficients.
SwitchingFunctionSet build_switching_closed_form(double x_i, double x_f);

/// Inverts the 8x8 support-function constraint matrix instead.
SwitchingFunctionSet build_switching_linear_solve(double x_i, double x_f);

SwitchingFunctionSet build_switching(double x_i, double x_f, SwitchingMode mode);

/// a^{(d)}(x) rows and b^{(d)}(x) values for d = 0..8 at one point.
struct CeRows {
  Eigen::MatrixXd a;                  // 9 x m
  Eigen::Matrix<double, 9, 1> b;
};

/// y(x, xi) = a(x)^T xi + b(x). Satisfies every boundary condition for any xi.
class ConstrainedExpression {
 public:
  ConstrainedExpression(BasisSet basis, BoundaryConditions bc, SwitchingMode mode);

  const BasisSet& basis() const { return basis_; }
  const SwitchingFunctionSet& switching() const { return switching_; }
  const BoundaryConditions& bc() const { return bc_; }
  int m() const { return basis_.m(); }

  /// Row k = c^{d_k} h^{(d_k)}(z(x_k)).
  const Eigen::MatrixXd& boundary_basis_table() const { return boundary_table_; }

  Eigen::VectorXd a_row(double x, int order) const;
  double b(double x, int order) const;
  double eval(double x, int order, const Eigen::VectorXd& xi) const;

  /// Every derivative order at once.
  CeRows rows(double x) const;

  /// y^{(0..8)}(x, xi).
  std::array<double, 9> state(double x, const Eigen::VectorXd& xi) const;

 private:
  void check_point(double x) const;
  void check_order(int order) const;
  void check_xi(const Eigen::VectorXd& xi) const;

  BasisSet basis_;
  BoundaryConditions bc_;
  SwitchingFunctionSet switching_;
  Eigen::MatrixXd boundary_table_;
  Vector8d values_;
};

ConstrainedExpression build_ce(const BasisSet& basis, const BoundaryConditions& bc,
                               SwitchingMode mode = SwitchingMode::closed_form);

}  // namespace tfc8
