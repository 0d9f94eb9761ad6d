#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace hyperising {

struct TruncationPolicy {
  double cutoff = 1e-12;  // relative discarded weight per truncation
  int chi_max = 1024;
};

// Open-boundary tensor train with runtime physical dimension d:
// states use d = 2, operators d = 4 with the fused index p = out + 2 * in.
// tensor(site, p) is the (left bond x right bond) matrix; contracting all
// sites with amplitude index s = sum_k p_k d^k (site 0 fastest) reproduces
// the dense object.
class TensorTrain {
 public:
  TensorTrain() = default;
  TensorTrain(int n_sites, int phys_dim);

  static TensorTrain product(int phys_dim, const std::vector<Eigen::VectorXcd>& local);

  int size() const { return static_cast<int>(sites_.size()); }
  int phys_dim() const { return d_; }

  Eigen::MatrixXcd& tensor(int site, int p) { return sites_[site][p]; }
  const Eigen::MatrixXcd& tensor(int site, int p) const { return sites_[site][p]; }

  int left_dim(int site) const { return static_cast<int>(sites_[site][0].rows()); }
  int right_dim(int site) const { return static_cast<int>(sites_[site][0].cols()); }
  int max_bond_dim() const;

  int center() const { return center_; }
  void set_center_unknown() { center_ = -1; }

  /// Gauge the train so `site` holds the norm; isometries elsewhere.
  void move_center_to(int site);

  std::complex<double> overlap(const TensorTrain& other) const;  // <this|other>
  double norm() const;
  void normalize();
  void scale(std::complex<double> factor);

  void apply_one_site(int site, const Eigen::MatrixXcd& u);

  /// Apply a (d^2 x d^2) operator on (site, site+1) with fused index
  /// p_{site+1} * d + p_site; SVD truncation. Returns the discarded weight.
  /// The orthogonality center ends on the right site when center_to_right.
  double apply_two_site(int site, const Eigen::MatrixXcd& gate, const TruncationPolicy& pol,
                        bool center_to_right = true, bool renormalize = false,
                        bool* chi_capped = nullptr);

  /// Schmidt spectrum across bond b (b sites on the left), normalized.
  Eigen::VectorXd bond_spectrum(int bond);
  double entanglement_entropy(int bond);

  std::complex<double> one_site_expectation(int site, const Eigen::MatrixXcd& op);
  /// <op_a(site_a) op_b(site_b)> with site_a < site_b.
  std::complex<double> two_site_expectation(int site_a, const Eigen::MatrixXcd& op_a,
                                            int site_b, const Eigen::MatrixXcd& op_b);

  Eigen::VectorXcd to_dense() const;

 private:
  void left_normalize_site(int site);   // QR, pushes R into site+1
  void right_normalize_site(int site);  // LQ, pushes L into site-1

  int d_ = 2;
  int center_ = -1;
  std::vector<std::vector<Eigen::MatrixXcd>> sites_;
};

}
