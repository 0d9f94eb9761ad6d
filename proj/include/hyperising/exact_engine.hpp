#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hyperising/model.hpp"
#include "hyperising/pauli.hpp"

namespace hyperising {

struct PureState {
  Eigen::VectorXcd amp;
  int n = 0;

  static PureState basis_state(int n, std::uint64_t index);
  static PureState all_up(int n) { return basis_state(n, 0); }
  static PureState random(int n, std::uint64_t seed);

  double norm() const { return amp.norm(); }
  void normalize() { amp /= amp.norm(); }
};

// Size guards for the dense oracle. Vectors are allowed to 2^14; full
// matrices (Hamiltonians, spectral decompositions, Heisenberg operators)
// only to 2^12. Spectral time evolution is used below `spectral_sites`,
// Krylov above it.
struct DenseLimits {
  int max_vector_sites = 14;
  int max_matrix_sites = 12;
  int spectral_sites = 10;
};

Eigen::VectorXd diagonal_part(const HamiltonianTerms& terms);

/// out = H * in, matrix free. `diag` must come from diagonal_part(terms).
void apply_hamiltonian(const HamiltonianTerms& terms, const Eigen::VectorXd& diag,
                       const Eigen::VectorXcd& in, Eigen::VectorXcd& out);

Eigen::MatrixXcd dense_hamiltonian(const HamiltonianTerms& terms, const DenseLimits& lim = {});

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // orthonormal columns
};

SpectralDecomposition diagonalize(const HamiltonianTerms& terms, const DenseLimits& lim = {});

/// Time evolution backend bound to one Hamiltonian. Uses the cached
/// spectral decomposition for small chains, Krylov propagation otherwise.
class ExactEvolver {
 public:
  explicit ExactEvolver(const HamiltonianTerms& terms, const DenseLimits& lim = {});

  PureState evolve(const PureState& state, double t) const;
  void evolve_inplace(Eigen::VectorXcd& amp, double t) const;

  /// Heisenberg operator W(t) = e^{iHt} W e^{-iHt} as a dense matrix;
  /// requires the spectral path (n <= max_matrix_sites).
  Eigen::MatrixXcd heisenberg_operator(const Eigen::MatrixXcd& w, double t) const;

  const SpectralDecomposition* spectral() const { return spectral_ ? spectral_.get() : nullptr; }
  int sites() const { return terms_.n; }

 private:
  HamiltonianTerms terms_;
  Eigen::VectorXd diag_;
  std::shared_ptr<SpectralDecomposition> spectral_;  // null on the Krylov path
};

/// Lowest eigenpair. Dense diagonalization when matrices fit, Lanczos otherwise.
std::pair<double, PureState> ground_state(const HamiltonianTerms& terms,
                                          const DenseLimits& lim = {},
                                          std::uint64_t seed = 0x9d2c5680);

/// Von Neumann entropy of sites [0, cut) against the rest, natural log.
double entanglement_entropy(const PureState& state, int cut);

/// Purification on 2n sites whose copy-A reduction is e^{-beta H}/Z.
/// Copy A occupies sites 0..n-1 (low bits), copy B sites n..2n-1.
PureState thermofield_double(const HamiltonianTerms& terms, double beta,
                             const DenseLimits& lim = {});

/// rho_A[a, a'] for subsystem = low `cut` sites of `state`.
Eigen::MatrixXcd reduced_density_matrix(const PureState& state, int cut);

std::vector<double> magnetization_profile(const PureState& state);

/// Expectation of sigma^z at one site.
double sigma_z_expectation(const PureState& state, int site);

/// Infinite-temperature OTOC
///   O = Tr(W(t) V^dag W(t) V) / Tr(W(t)^2 V^dag V),
/// evaluated exactly through the spectral decomposition. The denominator is
/// evaluated literally (it equals 2^n for Pauli W, V).
class ExactOtoc {
 public:
  ExactOtoc(const HamiltonianTerms& terms, const DenseLimits& lim = {});

  double infinite_temperature(int w_site, int v_site, double t,
                              Pauli w_op = Pauli::Z, Pauli v_op = Pauli::Z) const;

  /// Eigenstate/arbitrary-state variant <psi|W(t) V^dag W(t) V|psi> with the
  /// literal normalization <psi|W(t)^2 V^dag V|psi>.
  double eigenstate(const PureState& psi, int w_site, int v_site, double t,
                    Pauli w_op = Pauli::Z, Pauli v_op = Pauli::Z) const;

  const ExactEvolver& evolver() const { return evolver_; }

 private:
  ExactEvolver evolver_;
  DenseLimits lim_;
};

double otoc_exact_infT(const HamiltonianTerms& terms, int w_site, int v_site, double t,
                       Pauli w_op = Pauli::Z, Pauli v_op = Pauli::Z,
                       const DenseLimits& lim = {});

double otoc_exact_eig(const HamiltonianTerms& terms, const PureState& psi, int w_site,
                      int v_site, double t, Pauli w_op = Pauli::Z, Pauli v_op = Pauli::Z,
                      const DenseLimits& lim = {});

}
