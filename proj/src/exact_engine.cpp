#include "hyperising/exact_engine.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "hyperising/errors.hpp"
#include "hyperising/lanczos.hpp"
#include "hyperising/linalg.hpp"
#include "hyperising/rng.hpp"

namespace hyperising {

using namespace std::complex_literals;

namespace {

std::uint64_t dim_of(int n) { return std::uint64_t(1) << n; }

void check_vector_limit(int n, const DenseLimits& lim, const char* what) {
  if (n > lim.max_vector_sites)
    throw CapabilityError(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the dense vector limit " +
                          std::to_string(lim.max_vector_sites));
}

void check_matrix_limit(int n, const DenseLimits& lim, const char* what) {
  if (n > lim.max_matrix_sites)
    throw CapabilityError(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the dense matrix limit " +
                          std::to_string(lim.max_matrix_sites));
}

Eigen::MatrixXcd single_site_matrix(int n, int site, const Eigen::Matrix2cd& op) {
  const std::uint64_t d = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const std::uint64_t mask = std::uint64_t(1) << site;
  for (std::uint64_t s = 0; s < d; ++s) {
    int b = (s & mask) ? 1 : 0;
    m(s & ~mask, s) += op(0, b);
    m(s | mask, s) += op(1, b);
  }
  return m;
}

}  // namespace

PureState PureState::basis_state(int n, std::uint64_t index) {
  PureState st;
  st.n = n;
  st.amp = Eigen::VectorXcd::Zero(dim_of(n));
  st.amp[index] = 1.0;
  return st;
}

PureState PureState::random(int n, std::uint64_t seed) {
  PureState st;
  st.n = n;
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss;
  st.amp.resize(dim_of(n));
  for (Eigen::Index i = 0; i < st.amp.size(); ++i)
    st.amp[i] = std::complex<double>(gauss(rng), gauss(rng));
  st.normalize();
  return st;
}

Eigen::VectorXd diagonal_part(const HamiltonianTerms& terms) {
  const std::uint64_t d = dim_of(terms.n);
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(d, terms.constant);
  for (const auto& b : terms.zz) {
    for (std::uint64_t s = 0; s < d; ++s)
      diag[s] += b.coeff * z_sign(s, b.i) * z_sign(s, b.j);
  }
  for (const auto& t : terms.z) {
    for (std::uint64_t s = 0; s < d; ++s) diag[s] += t.coeff * z_sign(s, t.site);
  }
  return diag;
}

void apply_hamiltonian(const HamiltonianTerms& terms, const Eigen::VectorXd& diag,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  out = diag.cast<std::complex<double>>().cwiseProduct(in);
  const std::uint64_t d = static_cast<std::uint64_t>(in.size());
  for (const auto& t : terms.x) {
    if (t.coeff == 0.0) continue;
    const std::uint64_t mask = std::uint64_t(1) << t.site;
    for (std::uint64_t s = 0; s < d; ++s) out[s] += t.coeff * in[s ^ mask];
  }
}

Eigen::MatrixXcd dense_hamiltonian(const HamiltonianTerms& terms, const DenseLimits& lim) {
  check_matrix_limit(terms.n, lim, "dense_hamiltonian");
  const std::uint64_t d = dim_of(terms.n);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  h.diagonal() = diagonal_part(terms).cast<std::complex<double>>();
  for (const auto& t : terms.x) {
    const std::uint64_t mask = std::uint64_t(1) << t.site;
    for (std::uint64_t s = 0; s < d; ++s) h(s ^ mask, s) += t.coeff;
  }
  return h;
}

SpectralDecomposition diagonalize(const HamiltonianTerms& terms, const DenseLimits& lim) {
  Eigen::MatrixXcd h = dense_hamiltonian(terms, lim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

ExactEvolver::ExactEvolver(const HamiltonianTerms& terms, const DenseLimits& lim)
    : terms_(terms), diag_(diagonal_part(terms)) {
  check_vector_limit(terms.n, lim, "ExactEvolver");
  if (terms.n <= lim.spectral_sites)
    spectral_ = std::make_shared<SpectralDecomposition>(diagonalize(terms, lim));
}

void ExactEvolver::evolve_inplace(Eigen::VectorXcd& amp, double t) const {
  if (t == 0.0) return;
  if (spectral_) {
    Eigen::VectorXcd coeff = spectral_->eigenvectors.adjoint() * amp;
    for (Eigen::Index k = 0; k < coeff.size(); ++k)
      coeff[k] *= std::exp(-1i * spectral_->eigenvalues[k] * t);
    amp = spectral_->eigenvectors * coeff;
    return;
  }
  auto matvec = [this](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    apply_hamiltonian(terms_, diag_, in, out);
  };
  amp = lanczos_expm_apply(matvec, amp, t);
}

PureState ExactEvolver::evolve(const PureState& state, double t) const {
  PureState out = state;
  evolve_inplace(out.amp, t);
  return out;
}

Eigen::MatrixXcd ExactEvolver::heisenberg_operator(const Eigen::MatrixXcd& w, double t) const {
  if (!spectral_)
    throw CapabilityError("heisenberg_operator: requires the spectral path (small n)");
  const auto& u = spectral_->eigenvectors;
  const auto& ev = spectral_->eigenvalues;
  Eigen::MatrixXcd a = u.adjoint() * w * u;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      a(r, c) *= std::exp(1i * (ev[r] - ev[c]) * t);
  return u * a * u.adjoint();
}

std::pair<double, PureState> ground_state(const HamiltonianTerms& terms,
                                          const DenseLimits& lim, std::uint64_t seed) {
  check_vector_limit(terms.n, lim, "ground_state");
  PureState st;
  st.n = terms.n;
  if (terms.n <= lim.max_matrix_sites && terms.n <= 10) {
    SpectralDecomposition sd = diagonalize(terms, lim);
    st.amp = sd.eigenvectors.col(0);
    return {sd.eigenvalues[0], st};
  }
  Eigen::VectorXd diag = diagonal_part(terms);
  auto matvec = [&](const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    apply_hamiltonian(terms, diag, in, out);
  };
  PureState start = PureState::random(terms.n, seed);
  auto pair = lanczos_lowest(matvec, start.amp, 400, 40, 1e-12);
  st.amp = pair.vector;
  return {pair.value, st};
}

Eigen::MatrixXcd reduced_density_matrix(const PureState& state, int cut) {
  if (cut < 1 || cut >= state.n)
    throw std::invalid_argument("reduced_density_matrix: cut must be in [1, n-1]");
  const std::uint64_t da = dim_of(cut);
  const std::uint64_t db = dim_of(state.n - cut);
  // amp[a + b*da] with subsystem A on the low bits
  Eigen::Map<const Eigen::MatrixXcd> m(state.amp.data(), da, db);
  return m * m.adjoint();
}

double entanglement_entropy(const PureState& state, int cut) {
  if (cut < 1 || cut >= state.n)
    throw std::invalid_argument("entanglement_entropy: cut must be in [1, n-1]");
  const std::uint64_t da = dim_of(cut);
  const std::uint64_t db = dim_of(state.n - cut);
  Eigen::Map<const Eigen::MatrixXcd> m(state.amp.data(), da, db);
  auto svd = linalg::svd(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < svd.sigma.size(); ++i) {
    double p = svd.sigma[i] * svd.sigma[i];
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

PureState thermofield_double(const HamiltonianTerms& terms, double beta,
                             const DenseLimits& lim) {
  const int n = terms.n;
  if (2 * n > lim.max_vector_sites)
    throw CapabilityError("thermofield_double: 2n exceeds the dense vector limit");
  SpectralDecomposition sd = diagonalize(terms, lim);
  const std::uint64_t d = dim_of(n);

  // Subtract the ground energy before exponentiating to keep weights finite.
  Eigen::VectorXd w(d);
  for (std::uint64_t k = 0; k < d; ++k)
    w[k] = std::exp(-0.5 * beta * (sd.eigenvalues[k] - sd.eigenvalues[0]));
  w /= std::sqrt(w.squaredNorm());

  // |Psi> = sum_n w_n |n>_A (x) |n*>_B with the conjugate basis on copy B;
  // in matrix form Psi[a, b] = (U diag(w) U^dag)(a, b), which is manifestly
  // independent of how degenerate eigenvectors were picked.
  Eigen::MatrixXcd psi_mat =
      sd.eigenvectors * w.cast<std::complex<double>>().asDiagonal() * sd.eigenvectors.adjoint();
  PureState out;
  out.n = 2 * n;
  out.amp = Eigen::Map<const Eigen::VectorXcd>(psi_mat.data(), d * d);
  return out;
}

std::vector<double> magnetization_profile(const PureState& state) {
  std::vector<double> out(state.n, 0.0);
  const std::uint64_t d = static_cast<std::uint64_t>(state.amp.size());
  for (std::uint64_t s = 0; s < d; ++s) {
    double p = std::norm(state.amp[s]);
    if (p == 0.0) continue;
    for (int i = 0; i < state.n; ++i) out[i] += p * z_sign(s, i);
  }
  return out;
}

double sigma_z_expectation(const PureState& state, int site) {
  double e = 0.0;
  const std::uint64_t d = static_cast<std::uint64_t>(state.amp.size());
  for (std::uint64_t s = 0; s < d; ++s) e += std::norm(state.amp[s]) * z_sign(s, site);
  return e;
}

ExactOtoc::ExactOtoc(const HamiltonianTerms& terms, const DenseLimits& lim)
    : evolver_(terms, lim), lim_(lim) {}

double ExactOtoc::infinite_temperature(int w_site, int v_site, double t, Pauli w_op,
                                       Pauli v_op) const {
  const int n = evolver_.sites();
  check_matrix_limit(n, lim_, "otoc_exact_infT");
  if (!evolver_.spectral())
    throw CapabilityError("otoc_exact_infT: spectral decomposition unavailable at this n");

  Eigen::MatrixXcd w0 = single_site_matrix(n, w_site, pauli_matrix(w_op));
  Eigen::MatrixXcd wt = evolver_.heisenberg_operator(w0, t);
  Eigen::MatrixXcd v = single_site_matrix(n, v_site, pauli_matrix(v_op));

  // Tr(W(t) V^dag W(t) V) = sum_{rc} (W(t)V^dag)_{rc} (W(t)V)_{cr}
  Eigen::MatrixXcd p = wt * v.adjoint();
  Eigen::MatrixXcd q = wt * v;
  std::complex<double> num = (p.transpose().cwiseProduct(q)).sum();
  std::complex<double> den = (wt * wt * v.adjoint() * v).trace();

  if (std::abs(num.imag()) > 1e-9 * std::max(1.0, std::abs(num.real())))
    throw std::runtime_error("otoc_exact_infT: trace has a non-negligible imaginary part");
  return num.real() / den.real();
}

double ExactOtoc::eigenstate(const PureState& psi, int w_site, int v_site, double t,
                             Pauli w_op, Pauli v_op) const {
  const int n = evolver_.sites();
  if (psi.n != n) throw std::invalid_argument("otoc_exact_eig: state size mismatch");

  auto apply_w_t = [&](Eigen::VectorXcd& amp) {
    evolver_.evolve_inplace(amp, t);
    apply_pauli(amp, w_site, w_op);
    evolver_.evolve_inplace(amp, -t);
  };

  // numerator <psi| W(t) V^dag W(t) V |psi> = <rhs2 | rhs1>
  Eigen::VectorXcd rhs1 = psi.amp;
  apply_pauli(rhs1, v_site, v_op);
  apply_w_t(rhs1);
  Eigen::VectorXcd rhs2 = psi.amp;
  apply_w_t(rhs2);
  apply_pauli(rhs2, v_site, v_op);  // V = V^dag for Pauli operators
  std::complex<double> num = rhs2.dot(rhs1);

  // denominator <psi| W(t)^2 V^dag V |psi>, evaluated literally even though
  // it equals 1 for Pauli W, V
  Eigen::VectorXcd d1 = psi.amp;
  apply_w_t(d1);
  Eigen::VectorXcd d2 = psi.amp;
  apply_pauli(d2, v_site, v_op);
  apply_pauli(d2, v_site, v_op);
  apply_w_t(d2);
  std::complex<double> den = d1.dot(d2);

  return num.real() / den.real();
}

double otoc_exact_infT(const HamiltonianTerms& terms, int w_site, int v_site, double t,
                       Pauli w_op, Pauli v_op, const DenseLimits& lim) {
  return ExactOtoc(terms, lim).infinite_temperature(w_site, v_site, t, w_op, v_op);
}

double otoc_exact_eig(const HamiltonianTerms& terms, const PureState& psi, int w_site,
                      int v_site, double t, Pauli w_op, Pauli v_op, const DenseLimits& lim) {
  return ExactOtoc(terms, lim).eigenstate(psi, w_site, v_site, t, w_op, v_op);
}

}
