#include "hyperising/model.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperising {

void ModelParams::validate() const {
  if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
  if (l_max < 0.0) throw std::invalid_argument("ModelParams: l_max must be >= 0");
  if (!std::isfinite(J) || !std::isfinite(h) || !std::isfinite(m) || !std::isfinite(l_max))
    throw std::invalid_argument("ModelParams: couplings must be finite");
}

std::vector<double> deformation_factors(int n, double l_max) {
  if (n < 1) throw std::invalid_argument("deformation_factors: n must be >= 1");
  if (l_max < 0.0) throw std::invalid_argument("deformation_factors: l_max must be >= 0");
  std::vector<double> l(n, 0.0);
  if (n == 1) return l;
  for (int i = 0; i < n; ++i) l[i] = -l_max + i * (2.0 * l_max) / (n - 1);
  return l;
}

HamiltonianTerms build_hamiltonian(const ModelParams& p) {
  p.validate();
  const std::vector<double> l = deformation_factors(p.n, p.l_max);

  HamiltonianTerms terms;
  terms.n = p.n;
  terms.zz.reserve(p.n > 0 ? p.n - 1 : 0);
  terms.x.reserve(p.n);
  terms.z.reserve(p.n);

  for (int i = 0; i + 1 < p.n; ++i) {
    double w = -(p.J / 4.0) * (std::cosh(l[i]) + std::cosh(l[i + 1])) / 2.0;
    terms.zz.push_back({i, i + 1, w});
  }
  for (int i = 0; i < p.n; ++i) {
    terms.x.push_back({i, (p.h / 2.0) * std::cosh(l[i])});
    terms.z.push_back({i, (p.m / 2.0) * std::cosh(l[i])});
  }
  return terms;
}

bool HamiltonianTerms::nearest_neighbour_only() const {
  for (const auto& b : zz)
    if (b.j != b.i + 1) return false;
  return true;
}

nlohmann::json terms_to_json(const HamiltonianTerms& terms) {
  nlohmann::json j;
  j["n"] = terms.n;
  j["constant"] = terms.constant;
  auto& zz = j["zz_terms"] = nlohmann::json::array();
  for (const auto& b : terms.zz) zz.push_back({{"i", b.i}, {"j", b.j}, {"coeff", b.coeff}});
  auto& x = j["x_terms"] = nlohmann::json::array();
  for (const auto& s : terms.x) x.push_back({{"site", s.site}, {"coeff", s.coeff}});
  auto& z = j["z_terms"] = nlohmann::json::array();
  for (const auto& s : terms.z) z.push_back({{"site", s.site}, {"coeff", s.coeff}});
  return j;
}

}
