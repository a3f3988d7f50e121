#include "tfc8/ce.hpp"

#include "tfc8/errors.hpp"
#include "tfc8/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tfc8 {

namespace {

// k! / (k - d)!
double falling_factorial(int k, int d) {
  double out = 1.0;
  for (int i = 0; i < d; ++i) out *= static_cast<double>(k - i);
  return out;
}

void check_domain(double x_i, double x_f) {
  if (!std::isfinite(x_i) || !std::isfinite(x_f) || !(x_f > x_i)) {
    throw ConfigError("degenerate domain: need finite x_f > x_i, got [" + std::to_string(x_i) +
                      ", " + std::to_string(x_f) + "]");
  }
}

bool same_endpoint(double a, double b) { return std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)); }

}  // namespace

void BoundaryConditions::validate() const {
  check_domain(x_i, x_f);
  for (int k = 0; k < 4; ++k) {
    if (!std::isfinite(left_values[k]) || !std::isfinite(right_values[k])) {
      throw ConfigError("boundary value of derivative order " + std::to_string(k) +
                        " is not finite");
    }
  }
}

Vector8d BoundaryConditions::ordered_values() const {
  Vector8d v;
  for (int k = 0; k < kNumConstraints; ++k) {
    const int d = constraint_order(k);
    v[k] = constraint_at_left(k) ? left_values[d] : right_values[d];
  }
  return v;
}

// ---------------------------------------------------------------------------
// Switching functions

SwitchingFunctionSet::SwitchingFunctionSet(const Matrix8d& coeffs, double x_i, double x_f)
    : coeffs_(coeffs), x_i_(x_i), x_f_(x_f) {}

Vector8d SwitchingFunctionSet::eval(double x, int order) const {
  if (order <= 3 && (x == x_i_ || x == x_f_)) {
    // Monomial rounding would leave ~1e-17 residue here.
    Vector8d out = Vector8d::Zero();
    out[2 * order + (x == x_i_ ? 0 : 1)] = 1.0;
    return out;
  }
  return eval_polynomial(x, order);
}

Vector8d SwitchingFunctionSet::eval_polynomial(double x, int order) const {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw ContractViolation("switching derivative order must be in [0, 8], got " +
                            std::to_string(order));
  }
  Vector8d out = Vector8d::Zero();
  if (order >= kNumConstraints) return out;
  for (int j = 0; j < kNumConstraints; ++j) {
    double acc = 0.0;
    for (int k = kNumConstraints - 1; k >= order; --k) {
      acc = acc * x + falling_factorial(k, order) * coeffs_(j, k);
    }
    out[j] = acc;
  }
  return out;
}

Matrix8d SwitchingFunctionSet::kronecker_matrix() const {
  Matrix8d out;
  for (int k = 0; k < kNumConstraints; ++k) {
    const double x = constraint_at_left(k) ? x_i_ : x_f_;
    out.row(k) = eval_polynomial(x, constraint_order(k)).transpose();
  }
  return out;
}

SwitchingFunctionSet build_switching_closed_form(double x_i, double x_f) {
  check_domain(x_i, x_f);
  const double a = x_i;
  const double b = x_f;
  const double len = b - a;
  const Polynomial xa = Polynomial::linear_factor(a);
  const Polynomial xb = Polynomial::linear_factor(b);
  const Polynomial xa2 = xa.pow(2), xa3 = xa.pow(3), xa4 = xa.pow(4);
  const Polynomial xb2 = xb.pow(2), xb3 = xb.pow(3), xb4 = xb.pow(4);

  const Polynomial q1{-7.0 * b * b * a + 21.0 * b * a * a + b * b * b - 35.0 * a * a * a,
                      -28.0 * a * b + 84.0 * a * a + 4.0 * b * b, -70.0 * a + 10.0 * b, 20.0};
  const Polynomial q2{-7.0 * b * a * a + 21.0 * b * b * a - 35.0 * b * b * b + a * a * a,
                      -28.0 * a * b + 84.0 * b * b + 4.0 * a * a, -70.0 * b + 10.0 * a, 20.0};
  const Polynomial q3{-6.0 * a * b + b * b + 15.0 * a * a, -24.0 * a + 4.0 * b, 10.0};
  const Polynomial q4{-6.0 * a * b + 15.0 * b * b + a * a, -24.0 * b + 4.0 * a, 10.0};
  const Polynomial q5{b - 5.0 * a, 4.0};
  const Polynomial q6{-5.0 * b + a, 4.0};

  const double len4 = std::pow(len, 4), len5 = len4 * len, len6 = len5 * len, len7 = len6 * len;
  const std::array<Polynomial, kNumConstraints> beta{
      xb4 * q1 * (1.0 / len7),
      xa4 * q2 * (-1.0 / len7),
      xb4 * xa * q3 * (1.0 / len6),
      xb * xa4 * q4 * (1.0 / len6),
      xb4 * xa2 * q5 * (1.0 / (2.0 * len5)),
      xb2 * xa4 * q6 * (-1.0 / (2.0 * len5)),
      xb4 * xa3 * (1.0 / (6.0 * len4)),
      xb3 * xa4 * (1.0 / (6.0 * len4)),
  };

  Matrix8d coeffs = Matrix8d::Zero();
  for (int j = 0; j < kNumConstraints; ++j) {
    const auto& c = beta[j].coeffs();
    for (std::size_t k = 0; k < c.size() && k < kNumConstraints; ++k) coeffs(j, k) = c[k];
  }
  return SwitchingFunctionSet(coeffs, x_i, x_f);
}

SwitchingFunctionSet build_switching_linear_solve(double x_i, double x_f) {
  check_domain(x_i, x_f);
  // Row r: constraint r applied to the monomials x^0..x^7.
  Matrix8d m = Matrix8d::Zero();
  for (int r = 0; r < kNumConstraints; ++r) {
    const double x = constraint_at_left(r) ? x_i : x_f;
    const int d = constraint_order(r);
    for (int k = d; k < kNumConstraints; ++k) m(r, k) = falling_factorial(k, d) * std::pow(x, k - d);
  }

  const Eigen::PartialPivLU<Matrix8d> lu(m);
  const double scale = m.cwiseAbs().maxCoeff();
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot >= 1e-14 * scale)) {
    throw SingularSystemError("switching-function constraint matrix is numerically singular");
  }
  const Matrix8d inverse = lu.inverse();
  // beta_j(x) = sum_k inverse(k, j) x^k
  return SwitchingFunctionSet(inverse.transpose(), x_i, x_f);
}

SwitchingFunctionSet build_switching(double x_i, double x_f, SwitchingMode mode) {
  return mode == SwitchingMode::closed_form ? build_switching_closed_form(x_i, x_f)
                                            : build_switching_linear_solve(x_i, x_f);
}

// ---------------------------------------------------------------------------
// Constrained expression

ConstrainedExpression::ConstrainedExpression(BasisSet basis, BoundaryConditions bc,
                                             SwitchingMode mode)
    : basis_(std::move(basis)),
      bc_(bc),
      switching_(build_switching(bc.x_i, bc.x_f, mode)),
      values_(bc.ordered_values()) {
  bc_.validate();
  const DomainMap& map = basis_.domain_map();
  if (!same_endpoint(map.x_i(), bc_.x_i) || !same_endpoint(map.x_f(), bc_.x_f)) {
    throw ConfigError("basis domain [" + std::to_string(map.x_i()) + ", " +
                      std::to_string(map.x_f()) + "] does not match boundary-condition domain [" +
                      std::to_string(bc_.x_i) + ", " + std::to_string(bc_.x_f) + "]");
  }

  const double c = map.c();
  const Eigen::MatrixXd left = basis_.eval_all(map.z_0(), 3);
  const Eigen::MatrixXd right = basis_.eval_all(map.z_f(), 3);
  boundary_table_.resize(kNumConstraints, basis_.m());
  for (int k = 0; k < kNumConstraints; ++k) {
    const int d = constraint_order(k);
    const auto& h = constraint_at_left(k) ? left : right;
    boundary_table_.row(k) = std::pow(c, d) * h.row(d);
  }
}

void ConstrainedExpression::check_point(double x) const {
  const double slack = 1e-12 * (bc_.x_f - bc_.x_i);
  if (!(x >= bc_.x_i - slack && x <= bc_.x_f + slack)) {
    throw ContractViolation("x=" + std::to_string(x) + " lies outside the domain [" +
                            std::to_string(bc_.x_i) + ", " + std::to_string(bc_.x_f) + "]");
  }
}

void ConstrainedExpression::check_order(int order) const {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw ContractViolation("derivative order must be in [0, 8], got " + std::to_string(order));
  }
}

void ConstrainedExpression::check_xi(const Eigen::VectorXd& xi) const {
  if (xi.size() != basis_.m()) {
    throw ContractViolation("coefficient vector has " + std::to_string(xi.size()) +
                            " entries, expected " + std::to_string(basis_.m()));
  }
}

Eigen::VectorXd ConstrainedExpression::a_row(double x, int order) const {
  check_point(x);
  check_order(order);
  const double z = basis_.domain_map().to_z(x);
  const Eigen::VectorXd h = basis_.eval(std::clamp(z, -1.0, 1.0), order);
  const Vector8d beta = switching_.eval(x, order);
  return std::pow(basis_.domain_map().c(), order) * h - boundary_table_.transpose() * beta;
}

double ConstrainedExpression::b(double x, int order) const {
  check_point(x);
  check_order(order);
  return switching_.eval(x, order).dot(values_);
}

double ConstrainedExpression::eval(double x, int order, const Eigen::VectorXd& xi) const {
  check_xi(xi);
  return a_row(x, order).dot(xi) + b(x, order);
}

CeRows ConstrainedExpression::rows(double x) const {
  check_point(x);
  const double z = std::clamp(basis_.domain_map().to_z(x), -1.0, 1.0);
  const Eigen::MatrixXd h = basis_.eval_all(z, kMaxDerivativeOrder);
  const double c = basis_.domain_map().c();
  CeRows out;
  out.a.resize(kMaxDerivativeOrder + 1, basis_.m());
  for (int d = 0; d <= kMaxDerivativeOrder; ++d) {
    const Vector8d beta = switching_.eval(x, d);
    out.a.row(d) = std::pow(c, d) * h.row(d) - (boundary_table_.transpose() * beta).transpose();
    out.b[d] = beta.dot(values_);
  }
  return out;
}

std::array<double, 9> ConstrainedExpression::state(double x, const Eigen::VectorXd& xi) const {
  check_xi(xi);
  const CeRows r = rows(x);
  std::array<double, 9> out{};
  for (int d = 0; d <= kMaxDerivativeOrder; ++d) out[d] = r.a.row(d).dot(xi) + r.b[d];
  return out;
}

ConstrainedExpression build_ce(const BasisSet& basis, const BoundaryConditions& bc,
                               SwitchingMode mode) {
  return ConstrainedExpression(basis, bc, mode);
}

}  // namespace tfc8
