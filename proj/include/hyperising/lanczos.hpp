#pragma once

#include <Eigen/Dense>
#include <functional>

namespace hyperising {

using MatVec = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

/// y = exp(-i t H) v for Hermitian H given through its action.
/// Krylov subspaces with full reorthogonalization; t is split adaptively
/// until the a-posteriori error estimate per substep is below tol.
Eigen::VectorXcd lanczos_expm_apply(const MatVec& apply_h, const Eigen::VectorXcd& v,
                                    double t, int max_subspace = 60, double tol = 1e-13);

struct LowestEigenpair {
  double value = 0.0;
  Eigen::VectorXcd vector;
  int restarts = 0;
  double residual = 0.0;
};

/// Smallest eigenpair of a Hermitian operator via restarted Lanczos.
LowestEigenpair lanczos_lowest(const MatVec& apply_h, const Eigen::VectorXcd& start,
                               int max_restarts = 100, int subspace = 40,
                               double tol = 1e-11);

}
