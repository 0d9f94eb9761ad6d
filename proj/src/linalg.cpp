#include "hyperising/linalg.hpp"

#include <algorithm>
#include <complex>

#include <lapacke.h>

namespace hyperising::linalg {

Svd svd(const Eigen::MatrixXcd& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int k = std::min(rows, cols);

  Svd out;
  if (k == 0) {
    out.u.resize(rows, 0);
    out.sigma.resize(0);
    out.vh.resize(0, cols);
    return out;
  }

  Eigen::MatrixXcd a = m;  // zgesdd overwrites its input
  out.u.resize(rows, k);
  out.sigma.resize(k);
  out.vh.resize(k, cols);

  lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'S', rows, cols, a.data(), rows, out.sigma.data(),
      out.u.data(), rows, out.vh.data(), k);
  if (info == 0) return out;

  // Divide-and-conquer occasionally fails to converge; Jacobi is slow but sure.
  Eigen::JacobiSVD<Eigen::MatrixXcd> j(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.u = j.matrixU();
  out.sigma = j.singularValues();
  out.vh = j.matrixV().adjoint();
  return out;
}

TruncatedSvd svd_truncate(const Eigen::MatrixXcd& m, double cutoff, int chi_max) {
  Svd full = svd(m);
  const int k = static_cast<int>(full.sigma.size());

  double total = 0.0;
  for (int i = 0; i < k; ++i) total += full.sigma[i] * full.sigma[i];

  TruncatedSvd out;
  if (k == 0 || total <= 0.0) {
    out.u = full.u;
    out.sigma = full.sigma;
    out.vh = full.vh;
    return out;
  }

  // Singular values come back sorted descending; discard from the tail while
  // the cumulative discarded weight stays within the cutoff.
  int keep = k;
  double discarded = 0.0;
  while (keep > 1) {
    double w = full.sigma[keep - 1] * full.sigma[keep - 1];
    if ((discarded + w) / total > cutoff) break;
    discarded += w;
    --keep;
  }
  if (chi_max >= 1 && keep > chi_max) {
    for (int i = chi_max; i < keep; ++i) discarded += full.sigma[i] * full.sigma[i];
    keep = chi_max;
    out.chi_capped = true;
  }

  out.u = full.u.leftCols(keep);
  out.sigma = full.sigma.head(keep);
  out.vh = full.vh.topRows(keep);
  out.discarded_weight = discarded / total;
  return out;
}

}
