#pragma once

#include <Eigen/Dense>

namespace tfc8 {

struct LstsqOptions {
  /// Scale every column to unit 2-norm before factoring.
  bool scale_columns = true;
  /// |R_jj| below this (after scaling) is treated as rank deficiency.
  double rank_tolerance = 1e-13;
};

/// argmin ||A x - rhs||_2 via Householder QR. Requires rows >= cols and no
/// all-zero column; throws SingularSystemError naming the offending column.
Eigen::VectorXd lstsq_qr(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs,
                         const LstsqOptions& options = {});

/// Column-scaled variant used by the solvers.
inline Eigen::VectorXd lstsq_scaled_qr(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs) {
  return lstsq_qr(a, rhs, LstsqOptions{});
}

}  // namespace tfc8
