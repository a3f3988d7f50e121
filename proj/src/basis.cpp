#include "tfc8/basis.hpp"

#include "tfc8/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tfc8 {

namespace {

// Slack for z values that land a few ulps outside [-1, 1] after mapping.
constexpr double kZSlack = 1e-12;

}  // namespace

DomainMap::DomainMap(double x_i, double x_f) : x_i_(x_i), x_f_(x_f) {
  if (!std::isfinite(x_i) || !std::isfinite(x_f) || !(x_f > x_i)) {
    throw ConfigError("degenerate domain: need finite x_f > x_i, got [" + std::to_string(x_i) +
                      ", " + std::to_string(x_f) + "]");
  }
  c_ = (z_f_ - z_0_) / (x_f_ - x_i_);
}

double DomainMap::to_z(double x) const { return z_0_ + c_ * (x - x_i_); }

double DomainMap::to_x(double z) const { return x_i_ + (z - z_0_) / c_; }

BasisSet::BasisSet(int m, DomainMap map) : m_(m), map_(map) {
  if (m < 1) throw ConfigError("basis needs at least one term, got m=" + std::to_string(m));
}

Eigen::MatrixXd BasisSet::eval_all(double z, int max_order) const {
  if (max_order < 0 || max_order > kMaxDerivativeOrder) {
    throw ContractViolation("basis derivative order must be in [0, 8], got " +
                            std::to_string(max_order));
  }
  if (!(std::abs(z) <= 1.0 + kZSlack)) {
    throw ContractViolation("basis evaluated outside [-1, 1]: z=" + std::to_string(z));
  }

  const int top = kStartDegree + m_ - 1;
  // d(p, k) = p-th derivative of T_k at z.
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(max_order + 1, top + 1);
  d(0, 0) = 1.0;
  if (top >= 1) {
    d(0, 1) = z;
    if (max_order >= 1) d(1, 1) = 1.0;
  }
  for (int k = 1; k < top; ++k) {
    d(0, k + 1) = 2.0 * z * d(0, k) - d(0, k - 1);
    for (int p = 1; p <= max_order; ++p) {
      d(p, k + 1) = 2.0 * p * d(p - 1, k) + 2.0 * z * d(p, k) - d(p, k - 1);
    }
  }
  return d.rightCols(m_);
}

Eigen::VectorXd BasisSet::eval(double z, int order) const {
  return eval_all(z, order).row(order).transpose();
}

CollocationGrid make_grid(const DomainMap& map, int n_points) {
  if (n_points < 2) {
    throw ConfigError("collocation grid needs at least 2 points, got " + std::to_string(n_points));
  }
  CollocationGrid grid;
  grid.z_nodes.resize(n_points);
  grid.x_nodes.resize(n_points);
  const int last = n_points - 1;
  for (int k = 0; k <= last; ++k) {
    // Fill symmetric pairs from one cosine so z[k] == -z[last-k] bit for bit.
    if (2 * k > last) break;
    const double z = -std::cos(k * std::numbers::pi / last);
    grid.z_nodes[k] = z;
    grid.z_nodes[last - k] = -z;
  }
  if (last % 2 == 0) grid.z_nodes[last / 2] = 0.0;
  grid.z_nodes.front() = map.z_0();
  grid.z_nodes.back() = map.z_f();

  for (int k = 0; k <= last; ++k) grid.x_nodes[k] = map.to_x(grid.z_nodes[k]);
  grid.x_nodes.front() = map.x_i();
  grid.x_nodes.back() = map.x_f();
  return grid;
}

}  // namespace tfc8
