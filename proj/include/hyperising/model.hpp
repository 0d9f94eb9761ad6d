#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hyperising {

// Couplings of the deformed transverse-field Ising chain
//
//   H = -(J/4) sum_i (cosh l_i + cosh l_{i+1})/2  Z_i Z_{i+1}
//       + (h/2) sum_i cosh(l_i) X_i
//       + (m/2) sum_i cosh(l_i) Z_i
//
// with l_i = -l_max + i * 2 l_max / (N-1). Positive J is ferromagnetic.
struct ModelParams {
  double J = 1.0;
  double h = 0.0;
  double m = 0.0;      // defaults to zero when a run configuration omits it
  double l_max = 0.0;
  int n = 1;

  void validate() const;  // throws std::invalid_argument
};

/// Site profile l_i: exact linear spacing from -l_max to +l_max
/// (a single site gets l = 0). Rejects n < 1.
std::vector<double> deformation_factors(int n, double l_max);

/// Explicit weighted Pauli terms; every engine consumes this form.
/// The model builder emits nearest-neighbour bonds only; the Rydberg
/// mapping reuses the same container with arbitrary (i, j) pairs and a
/// constant identity offset.
struct HamiltonianTerms {
  struct BondTerm {
    int i = 0, j = 0;
    double coeff = 0.0;  // coeff * Z_i Z_j
  };
  struct SiteTerm {
    int site = 0;
    double coeff = 0.0;
  };

  int n = 0;
  std::vector<BondTerm> zz;
  std::vector<SiteTerm> x;
  std::vector<SiteTerm> z;
  double constant = 0.0;

  bool nearest_neighbour_only() const;
};

HamiltonianTerms build_hamiltonian(const ModelParams& p);

nlohmann::json terms_to_json(const HamiltonianTerms& terms);

}
