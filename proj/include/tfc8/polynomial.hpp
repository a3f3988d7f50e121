#pragma once

#include <initializer_list>
#include <vector>

namespace tfc8 {

/// Dense univariate polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  /// The linear factor (x - root).
  static Polynomial linear_factor(double root);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

  Polynomial derivative(int order = 1) const;
  double operator()(double x) const;

  Polynomial pow(int exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  std::vector<double> coeffs_;
};

}  // namespace tfc8
