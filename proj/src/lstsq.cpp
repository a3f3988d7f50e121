#include "tfc8/lstsq.hpp"

#include "tfc8/errors.hpp"

#include <cmath>
#include <string>

namespace tfc8 {

Eigen::VectorXd lstsq_qr(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs,
                         const LstsqOptions& options) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (rows < cols) {
    throw ContractViolation("least-squares system is underdetermined: " + std::to_string(rows) +
                            " rows for " + std::to_string(cols) + " unknowns");
  }
  if (rhs.size() != rows) {
    throw ContractViolation("right-hand side has " + std::to_string(rhs.size()) +
                            " entries, expected " + std::to_string(rows));
  }
  if (!a.allFinite() || !rhs.allFinite()) {
    throw EvaluationError("least-squares system contains non-finite entries");
  }

  Eigen::VectorXd scale = Eigen::VectorXd::Ones(cols);
  Eigen::VectorXd column_norm(cols);
  Eigen::MatrixXd r = a;
  for (Eigen::Index j = 0; j < cols; ++j) {
    column_norm[j] = r.col(j).norm();
    if (column_norm[j] == 0.0) {
      throw SingularSystemError("least-squares column " + std::to_string(j) + " is all zero");
    }
    if (options.scale_columns) {
      scale[j] = 1.0 / column_norm[j];
      r.col(j) *= scale[j];
      column_norm[j] = 1.0;
    }
  }

  // In-place Householder triangularisation, reflectors applied to qtb as we go.
  Eigen::VectorXd qtb = rhs;
  for (Eigen::Index k = 0; k < cols; ++k) {
    const Eigen::Index len = rows - k;
    auto x = r.col(k).tail(len);
    const double alpha = x.norm();
    if (alpha == 0.0) continue;
    const double beta = x[0] > 0.0 ? -alpha : alpha;
    Eigen::VectorXd v = x;
    v[0] -= beta;
    const double vnorm2 = v.squaredNorm();
    if (vnorm2 > 0.0) {
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        auto col = r.col(j).tail(len);
        col -= (2.0 * v.dot(col) / vnorm2) * v;
      }
      auto tail = qtb.tail(len);
      tail -= (2.0 * v.dot(tail) / vnorm2) * v;
    }
    x.setZero();
    x[0] = beta;
  }

  // Each pivot is judged against its own column norm (1 after scaling).
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (!(std::abs(r(j, j)) >= options.rank_tolerance * column_norm[j])) {
      throw SingularSystemError("least-squares matrix is rank deficient at column " +
                                std::to_string(j) + " (|R_jj| = " + std::to_string(std::abs(r(j, j))) +
                                ")");
    }
  }

  Eigen::VectorXd sol = r.topLeftCorner(cols, cols)
                            .triangularView<Eigen::Upper>()
                            .solve(qtb.head(cols));
  return sol.cwiseProduct(scale);
}

}  // namespace tfc8
