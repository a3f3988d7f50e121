#include "tfc8/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace tfc8 {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}

Polynomial Polynomial::linear_factor(double root) { return Polynomial{-root, 1.0}; }

Polynomial Polynomial::derivative(int order) const {
  std::vector<double> c = coeffs_;
  for (int p = 0; p < order; ++p) {
    if (c.size() <= 1) return Polynomial{};
    for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = static_cast<double>(k) * c[k];
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial out{1.0};
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial{};
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

}  // namespace tfc8
