#include "hyperising/lanczos.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace hyperising {

namespace {

struct Tridiagonal {
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[k] couples k and k+1
};

// Eigen-decomposition of the real symmetric tridiagonal built by Lanczos.
void tridiag_eig(const Tridiagonal& t, Eigen::VectorXd& evals, Eigen::MatrixXd& evecs) {
  const int m = static_cast<int>(t.alpha.size());
  Eigen::MatrixXd tm = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    tm(i, i) = t.alpha[i];
    if (i + 1 < m) tm(i, i + 1) = tm(i + 1, i) = t.beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tm);
  evals = es.eigenvalues();
  evecs = es.eigenvectors();
}

// One Lanczos pass with full reorthogonalization. Returns the basis and the
// tridiagonal; stops early on invariant-subspace breakdown.
int lanczos_basis(const MatVec& apply_h, const Eigen::VectorXcd& start, int m,
                  std::vector<Eigen::VectorXcd>& basis, Tridiagonal& tri) {
  const double breakdown = 1e-14;
  basis.clear();
  tri.alpha.clear();
  tri.beta.clear();

  Eigen::VectorXcd v = start / start.norm();
  basis.push_back(v);
  Eigen::VectorXcd w(v.size());
  for (int k = 0; k < m; ++k) {
    apply_h(basis[k], w);
    double a = std::real(basis[k].dot(w));
    tri.alpha.push_back(a);
    w -= a * basis[k];
    if (k > 0) w -= tri.beta[k - 1] * basis[k - 1];
    // full reorthogonalization, twice for safety
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;
    double nb = w.norm();
    if (k + 1 == m) break;
    if (nb < breakdown) return k + 1;
    tri.beta.push_back(nb);
    basis.push_back(w / nb);
  }
  return static_cast<int>(basis.size());
}

}  // namespace

Eigen::VectorXcd lanczos_expm_apply(const MatVec& apply_h, const Eigen::VectorXcd& v,
                                    double t, int max_subspace, double tol) {
  using namespace std::complex_literals;
  const double vnorm = v.norm();
  if (vnorm == 0.0 || t == 0.0) return v;

  Eigen::VectorXcd current = v;
  double remaining = std::abs(t);
  const double sign = t >= 0 ? 1.0 : -1.0;
  double step = remaining;
  int guard = 0;

  while (remaining > 0.0) {
    if (++guard > 10000) throw std::runtime_error("lanczos_expm_apply: step control failed");
    double dt = std::min(step, remaining);

    std::vector<Eigen::VectorXcd> basis;
    Tridiagonal tri;
    int m = lanczos_basis(apply_h, current, max_subspace, basis, tri);

    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
    tridiag_eig(tri, evals, evecs);

    // coeffs = evecs * exp(-i dt evals) * evecs^T e_1 * |current|
    Eigen::VectorXd first = evecs.row(0);
    Eigen::VectorXcd phases(m);
    for (int i = 0; i < m; ++i) phases[i] = std::exp(-1i * sign * dt * evals[i]);
    Eigen::VectorXcd coeff = evecs * (phases.array() * first.cast<std::complex<double>>().array()).matrix();

    // Error heuristic: weight in the last Krylov direction. A happy breakdown
    // (m < max_subspace) means the subspace is exact.
    double err = (m < max_subspace) ? 0.0 : std::abs(coeff[m - 1]);
    if (err > tol && dt > 1e-12) {
      step = dt / 2;
      continue;
    }

    double cn = current.norm();
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(current.size());
    for (int i = 0; i < m; ++i) next += coeff[i] * basis[i];
    current = cn * next;
    remaining -= dt;
    step = dt * (err < tol / 4 ? 2.0 : 1.0);
  }
  return current;
}

LowestEigenpair lanczos_lowest(const MatVec& apply_h, const Eigen::VectorXcd& start,
                               int max_restarts, int subspace, double tol) {
  LowestEigenpair out;
  Eigen::VectorXcd guess = start;
  if (guess.norm() == 0.0) throw std::invalid_argument("lanczos_lowest: zero start vector");
  guess.normalize();

  Eigen::VectorXcd hx(guess.size());
  for (int r = 0; r < max_restarts; ++r) {
    std::vector<Eigen::VectorXcd> basis;
    Tridiagonal tri;
    int m = lanczos_basis(apply_h, guess, subspace, basis, tri);

    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
    tridiag_eig(tri, evals, evecs);

    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(guess.size());
    for (int i = 0; i < m; ++i) x += evecs(i, 0) * basis[i];
    x.normalize();

    apply_h(x, hx);
    double lambda = std::real(x.dot(hx));
    double res = (hx - lambda * x).norm();

    out.value = lambda;
    out.vector = x;
    out.restarts = r + 1;
    out.residual = res;
    guess = x;
    if (res <= tol * std::max(1.0, std::abs(lambda)) || m < subspace) break;
  }
  return out;
}

}
