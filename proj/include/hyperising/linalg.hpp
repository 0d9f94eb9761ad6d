#pragma once

#include <Eigen/Dense>

namespace hyperising::linalg {

struct Svd {
  Eigen::MatrixXcd u;        // m x k
  Eigen::VectorXd sigma;     // k
  Eigen::MatrixXcd vh;       // k x n
};

/// Thin SVD via LAPACK divide-and-conquer, with a Jacobi fallback.
Svd svd(const Eigen::MatrixXcd& m);

struct TruncatedSvd {
  Eigen::MatrixXcd u;
  Eigen::VectorXd sigma;
  Eigen::MatrixXcd vh;
  double discarded_weight = 0.0;  // sum of discarded sigma^2 / total sigma^2
  bool chi_capped = false;        // rank was limited by chi_max, not cutoff
};

/// Thin SVD truncated to relative discarded weight <= cutoff and rank <= chi_max.
/// At least one singular value is always kept.
TruncatedSvd svd_truncate(const Eigen::MatrixXcd& m, double cutoff, int chi_max);

}
