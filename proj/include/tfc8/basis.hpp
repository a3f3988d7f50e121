#pragma once

#include <Eigen/Dense>

#include <vector>

namespace tfc8 {

inline constexpr int kMaxDerivativeOrder = 8;

/// Affine map between the problem domain [x_i, x_f] and the Chebyshev
/// domain [-1, +1].
class DomainMap {
 public:
  DomainMap(double x_i, double x_f);

  double x_i() const { return x_i_; }
  double x_f() const { return x_f_; }
  double z_0() const { return z_0_; }
  double z_f() const { return z_f_; }
  /// dz/dx
  double c() const { return c_; }

  double to_z(double x) const;
  double to_x(double z) const;

 private:
  double x_i_;
  double x_f_;
  double z_0_ = -1.0;
  double z_f_ = 1.0;
  double c_;
};

/// Chebyshev polynomials T_{start}, ..., T_{start+m-1}. The low-order terms
/// are skipped so the free function stays independent of the monomial
/// support functions 1..x^7.
class BasisSet {
 public:
  static constexpr int kStartDegree = 8;

  BasisSet(int m, DomainMap map);

  int m() const { return m_; }
  int start_degree() const { return kStartDegree; }
  const DomainMap& domain_map() const { return map_; }

  /// z-derivative of the given order of every basis term at z (no c^n factor).
  Eigen::VectorXd eval(double z, int order) const;

  /// Rows 0..max_order hold eval(z, row). Cheaper than repeated eval calls.
  Eigen::MatrixXd eval_all(double z, int max_order) const;

 private:
  int m_;
  DomainMap map_;
};

struct CollocationGrid {
  std::vector<double> z_nodes;
  std::vector<double> x_nodes;

  int n_points() const { return static_cast<int>(z_nodes.size()); }
};

/// Chebyshev-Gauss-Lobatto nodes z_k = -cos(k pi / (n_points - 1)).
/// n_points is the total point count. Endpoints map exactly onto x_i, x_f.
CollocationGrid make_grid(const DomainMap& map, int n_points);

}  // namespace tfc8
