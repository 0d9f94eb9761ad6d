#include "hyperising/tensor_train.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperising/linalg.hpp"

namespace hyperising {

TensorTrain::TensorTrain(int n_sites, int phys_dim) : d_(phys_dim) {
  sites_.resize(n_sites);
  for (auto& s : sites_) {
    s.assign(d_, Eigen::MatrixXcd::Zero(1, 1));
    s[0](0, 0) = 1.0;
  }
  center_ = 0;
}

TensorTrain TensorTrain::product(int phys_dim, const std::vector<Eigen::VectorXcd>& local) {
  TensorTrain tt(static_cast<int>(local.size()), phys_dim);
  for (int k = 0; k < tt.size(); ++k) {
    if (local[k].size() != phys_dim)
      throw std::invalid_argument("TensorTrain::product: local vector has wrong dimension");
    for (int p = 0; p < phys_dim; ++p) tt.sites_[k][p](0, 0) = local[k][p];
  }
  tt.center_ = -1;  // not normalized in general
  return tt;
}

int TensorTrain::max_bond_dim() const {
  int chi = 1;
  for (int k = 0; k + 1 < size(); ++k) chi = std::max(chi, right_dim(k));
  return chi;
}

void TensorTrain::left_normalize_site(int site) {
  const int dl = left_dim(site), dr = right_dim(site);
  Eigen::MatrixXcd m(dl * d_, dr);
  for (int p = 0; p < d_; ++p) m.middleRows(p * dl, dl) = sites_[site][p];

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  const int k = std::min<int>(dl * d_, dr);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dl * d_, k);
  Eigen::MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();

  for (int p = 0; p < d_; ++p) sites_[site][p] = q.middleRows(p * dl, dl);
  if (site + 1 < size()) {
    for (int p = 0; p < d_; ++p) sites_[site + 1][p] = r * sites_[site + 1][p];
  } else {
    // norm factor of the full train; fold it back to keep contraction exact
    for (int p = 0; p < d_; ++p) sites_[site][p] *= r(0, 0);
  }
}

void TensorTrain::right_normalize_site(int site) {
  const int dl = left_dim(site), dr = right_dim(site);
  Eigen::MatrixXcd m(dl, dr * d_);
  for (int p = 0; p < d_; ++p) m.middleCols(p * dr, dr) = sites_[site][p];

  // LQ of m through QR of its adjoint: m = L Q with Q row-orthonormal
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m.adjoint());
  const int k = std::min<int>(dl, dr * d_);
  Eigen::MatrixXcd q = (qr.householderQ() * Eigen::MatrixXcd::Identity(dr * d_, k)).adjoint();
  Eigen::MatrixXcd l = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>().adjoint();

  for (int p = 0; p < d_; ++p) sites_[site][p] = q.middleCols(p * dr, dr);
  if (site > 0) {
    for (int p = 0; p < d_; ++p) sites_[site - 1][p] = sites_[site - 1][p] * l;
  } else {
    for (int p = 0; p < d_; ++p) sites_[site][p] = l(0, 0) * sites_[site][p];
  }
}

void TensorTrain::move_center_to(int site) {
  if (center_ == -1) {
    for (int k = 0; k < site; ++k) left_normalize_site(k);
    for (int k = size() - 1; k > site; --k) right_normalize_site(k);
    center_ = site;
    return;
  }
  while (center_ < site) left_normalize_site(center_++);
  while (center_ > site) right_normalize_site(center_--);
}

std::complex<double> TensorTrain::overlap(const TensorTrain& other) const {
  if (other.size() != size() || other.d_ != d_)
    throw std::invalid_argument("TensorTrain::overlap: shape mismatch");
  Eigen::MatrixXcd env = Eigen::MatrixXcd::Ones(1, 1);
  for (int k = 0; k < size(); ++k) {
    Eigen::MatrixXcd next =
        Eigen::MatrixXcd::Zero(sites_[k][0].cols(), other.sites_[k][0].cols());
    for (int p = 0; p < d_; ++p)
      next += sites_[k][p].adjoint() * env * other.sites_[k][p];
    env = std::move(next);
  }
  return env(0, 0);
}

double TensorTrain::norm() const {
  if (center_ >= 0) {
    double n2 = 0.0;
    for (int p = 0; p < d_; ++p) n2 += sites_[center_][p].squaredNorm();
    return std::sqrt(n2);
  }
  return std::sqrt(std::abs(overlap(*this).real()));
}

void TensorTrain::normalize() {
  if (center_ == -1) move_center_to(0);
  double n = norm();
  if (n == 0.0) throw std::runtime_error("TensorTrain::normalize: zero norm");
  for (int p = 0; p < d_; ++p) sites_[center_][p] /= n;
}

void TensorTrain::scale(std::complex<double> factor) {
  int site = center_ >= 0 ? center_ : 0;
  for (int p = 0; p < d_; ++p) sites_[site][p] *= factor;
}

void TensorTrain::apply_one_site(int site, const Eigen::MatrixXcd& u) {
  std::vector<Eigen::MatrixXcd> out(d_);
  for (int pp = 0; pp < d_; ++pp) {
    out[pp] = Eigen::MatrixXcd::Zero(left_dim(site), right_dim(site));
    for (int p = 0; p < d_; ++p)
      if (u(pp, p) != std::complex<double>(0.0)) out[pp] += u(pp, p) * sites_[site][p];
  }
  sites_[site] = std::move(out);
}

double TensorTrain::apply_two_site(int site, const Eigen::MatrixXcd& gate,
                                   const TruncationPolicy& pol, bool center_to_right,
                                   bool renormalize, bool* chi_capped) {
  if (site < 0 || site + 1 >= size())
    throw std::invalid_argument("apply_two_site: bad site");
  if (center_ != site && center_ != site + 1) move_center_to(site);

  const int dl = left_dim(site), dr = right_dim(site + 1);

  // theta blocks B[p1][p2] = T1[p1] * T2[p2], then the gate mixes blocks
  std::vector<std::vector<Eigen::MatrixXcd>> blocks(d_, std::vector<Eigen::MatrixXcd>(d_));
  for (int p1 = 0; p1 < d_; ++p1)
    for (int p2 = 0; p2 < d_; ++p2) blocks[p1][p2] = sites_[site][p1] * sites_[site + 1][p2];

  Eigen::MatrixXcd theta = Eigen::MatrixXcd::Zero(dl * d_, dr * d_);
  for (int q1 = 0; q1 < d_; ++q1)
    for (int q2 = 0; q2 < d_; ++q2) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dl, dr);
      for (int p1 = 0; p1 < d_; ++p1)
        for (int p2 = 0; p2 < d_; ++p2) {
          auto g = gate(q2 * d_ + q1, p2 * d_ + p1);
          if (g != std::complex<double>(0.0)) acc += g * blocks[p1][p2];
        }
      theta.block(q1 * dl, q2 * dr, dl, dr) = acc;
    }

  auto svd = linalg::svd_truncate(theta, pol.cutoff, pol.chi_max);
  if (chi_capped && svd.chi_capped) *chi_capped = true;
  Eigen::VectorXd sigma = svd.sigma;
  if (renormalize && sigma.norm() > 0.0) sigma /= sigma.norm();

  const int k = static_cast<int>(sigma.size());
  for (int p = 0; p < d_; ++p) {
    if (center_to_right) {
      sites_[site][p] = svd.u.middleRows(p * dl, dl);
      sites_[site + 1][p] = sigma.cast<std::complex<double>>().asDiagonal() *
                            svd.vh.block(0, p * dr, k, dr);
    } else {
      sites_[site][p] = svd.u.middleRows(p * dl, dl) *
                        sigma.cast<std::complex<double>>().asDiagonal();
      sites_[site + 1][p] = svd.vh.block(0, p * dr, k, dr);
    }
  }
  center_ = center_to_right ? site + 1 : site;
  return svd.discarded_weight;
}

Eigen::VectorXd TensorTrain::bond_spectrum(int bond) {
  if (bond < 1 || bond >= size())
    throw std::invalid_argument("bond_spectrum: bond must be in [1, n-1]");
  move_center_to(bond - 1);
  // SVD the center tensor against the bond: rows (p, a), cols b
  const int dl = left_dim(bond - 1), dr = right_dim(bond - 1);
  Eigen::MatrixXcd m(dl * d_, dr);
  for (int p = 0; p < d_; ++p) m.middleRows(p * dl, dl) = sites_[bond - 1][p];
  auto svd = linalg::svd(m);
  Eigen::VectorXd sigma = svd.sigma;
  double n = sigma.norm();
  if (n > 0) sigma /= n;
  return sigma;
}

double TensorTrain::entanglement_entropy(int bond) {
  Eigen::VectorXd sigma = bond_spectrum(bond);
  double s = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    double p = sigma[i] * sigma[i];
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

std::complex<double> TensorTrain::one_site_expectation(int site, const Eigen::MatrixXcd& op) {
  move_center_to(site);
  std::complex<double> val = 0.0;
  for (int pp = 0; pp < d_; ++pp)
    for (int p = 0; p < d_; ++p) {
      auto o = op(pp, p);
      if (o != std::complex<double>(0.0))
        val += o * (sites_[site][pp].conjugate().cwiseProduct(sites_[site][p])).sum();
    }
  double n2 = 0.0;
  for (int p = 0; p < d_; ++p) n2 += sites_[site][p].squaredNorm();
  return val / n2;
}

std::complex<double> TensorTrain::two_site_expectation(int site_a, const Eigen::MatrixXcd& op_a,
                                                       int site_b, const Eigen::MatrixXcd& op_b) {
  if (site_a >= site_b) throw std::invalid_argument("two_site_expectation: need site_a < site_b");
  move_center_to(site_a);

  // env over the ket-bra pair after applying op_a at the center site
  Eigen::MatrixXcd env = Eigen::MatrixXcd::Zero(right_dim(site_a), right_dim(site_a));
  for (int pp = 0; pp < d_; ++pp)
    for (int p = 0; p < d_; ++p) {
      auto o = op_a(pp, p);
      if (o != std::complex<double>(0.0))
        env += o * sites_[site_a][pp].adjoint() * sites_[site_a][p];
    }
  for (int k = site_a + 1; k < site_b; ++k) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(right_dim(k), right_dim(k));
    for (int p = 0; p < d_; ++p) next += sites_[k][p].adjoint() * env * sites_[k][p];
    env = std::move(next);
  }
  std::complex<double> val = 0.0;
  for (int pp = 0; pp < d_; ++pp)
    for (int p = 0; p < d_; ++p) {
      auto o = op_b(pp, p);
      if (o != std::complex<double>(0.0))
        val += o * (sites_[site_b][pp].adjoint() * env * sites_[site_b][p]).trace();
    }
  double n2 = 0.0;
  for (int p = 0; p < d_; ++p) n2 += sites_[site_a][p].squaredNorm();
  return val / n2;
}

Eigen::VectorXcd TensorTrain::to_dense() const {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (int k = 0; k < size(); ++k) {
    const Eigen::Index rows = acc.rows();
    Eigen::MatrixXcd next(rows * d_, right_dim(k));
    for (int p = 0; p < d_; ++p) next.middleRows(p * rows, rows) = acc * sites_[k][p];
    acc = std::move(next);
  }
  return Eigen::Map<const Eigen::VectorXcd>(acc.data(), acc.rows());
}

}
