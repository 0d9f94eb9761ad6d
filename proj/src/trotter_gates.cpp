#include "hyperising/trotter_gates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hyperising/errors.hpp"

namespace hyperising {

using namespace std::complex_literals;

GateOrdering ordering_from_string(const std::string& s) {
  if (s == "even-odd" || s == "evenodd") return GateOrdering::EvenOdd;
  if (s == "sequential" || s == "seq") return GateOrdering::Sequential;
  throw ConfigError("unknown gate ordering '" + s + "' (expected even-odd or sequential)");
}

std::string to_string(GateOrdering o) {
  return o == GateOrdering::EvenOdd ? "even-odd" : "sequential";
}

namespace {

// exp(-i (a X + b Z) t) through the Pauli rotation formula.
Eigen::Matrix2cd one_site_exponential(double a, double b, double t) {
  double r = std::hypot(a, b);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  if (r == 0.0 || t == 0.0) return u;
  double c = std::cos(r * t), s = std::sin(r * t);
  Eigen::Matrix2cd gen;
  gen << b / r, a / r, a / r, -b / r;
  u = c * Eigen::Matrix2cd::Identity() - 1i * s * gen;
  return u;
}

// exp(-i t (w_zz Z Z + ax X_lo + bx X_hi + az Z_lo + bz Z_hi)) on a fused
// two-site space, hi = left_site + 1 slow.
Eigen::Matrix4cd bond_exponential(double w_zz, double ax, double bx, double az, double bz,
                                  double t) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  const double zs[2] = {1.0, -1.0};
  for (int hi = 0; hi < 2; ++hi)
    for (int lo = 0; lo < 2; ++lo) {
      int k = hi * 2 + lo;
      h(k, k) = w_zz * zs[lo] * zs[hi] + az * zs[lo] + bz * zs[hi];
      h(hi * 2 + (1 - lo), k) += ax;
      h((1 - hi) * 2 + lo, k) += bx;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) phases[i] = std::exp(-1i * es.eigenvalues()[i] * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

struct FieldShares {
  // per-bond shares of the one-site terms (lo = left site, hi = right site)
  std::vector<double> x_lo, x_hi, z_lo, z_hi;
};

FieldShares split_fields(const HamiltonianTerms& terms) {
  const int n = terms.n;
  FieldShares f;
  f.x_lo.assign(n - 1, 0.0);
  f.x_hi.assign(n - 1, 0.0);
  f.z_lo.assign(n - 1, 0.0);
  f.z_hi.assign(n - 1, 0.0);
  auto share = [n](int site) { return (site == 0 || site == n - 1) ? 1.0 : 0.5; };
  for (const auto& t : terms.x) {
    if (t.site < n - 1) f.x_lo[t.site] += share(t.site) * t.coeff;
    if (t.site > 0) f.x_hi[t.site - 1] += share(t.site) * t.coeff;
  }
  for (const auto& t : terms.z) {
    if (t.site < n - 1) f.z_lo[t.site] += share(t.site) * t.coeff;
    if (t.site > 0) f.z_hi[t.site - 1] += share(t.site) * t.coeff;
  }
  return f;
}

double bond_coeff(const HamiltonianTerms& terms, int bond) {
  for (const auto& b : terms.zz)
    if (b.i == bond && b.j == bond + 1) return b.coeff;
  return 0.0;
}

void append_bond_gates(std::vector<TwoSiteGate>& gates, const HamiltonianTerms& terms,
                       const FieldShares& f, const std::vector<int>& bonds, double dt) {
  for (int b : bonds)
    gates.push_back({b, bond_exponential(bond_coeff(terms, b), f.x_lo[b], f.x_hi[b],
                                         f.z_lo[b], f.z_hi[b], dt)});
}

}  // namespace

TrotterStep tebd_step(const HamiltonianTerms& terms, double dt, GateOrdering ordering,
                      int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("tebd_step: order must be 1 or 2");
  if (!terms.nearest_neighbour_only())
    throw std::invalid_argument("tebd_step: nearest-neighbour terms required");

  TrotterStep step;
  step.n = terms.n;
  step.dt = dt;
  step.ordering = ordering;
  step.order = order;

  if (terms.n == 1) {
    double ax = terms.x.empty() ? 0.0 : terms.x[0].coeff;
    double az = terms.z.empty() ? 0.0 : terms.z[0].coeff;
    step.site_gates.push_back({0, one_site_exponential(ax, az, dt)});
    return step;
  }

  FieldShares f = split_fields(terms);
  std::vector<int> even, odd, all;
  for (int b = 0; b + 1 < terms.n; ++b) {
    all.push_back(b);
    (b % 2 == 0 ? even : odd).push_back(b);
  }

  if (ordering == GateOrdering::EvenOdd) {
    if (order == 1) {
      append_bond_gates(step.bond_gates, terms, f, even, dt);
      append_bond_gates(step.bond_gates, terms, f, odd, dt);
    } else {
      append_bond_gates(step.bond_gates, terms, f, even, dt / 2);
      append_bond_gates(step.bond_gates, terms, f, odd, dt);
      append_bond_gates(step.bond_gates, terms, f, even, dt / 2);
    }
  } else {
    if (order == 1) {
      append_bond_gates(step.bond_gates, terms, f, all, dt);
    } else {
      std::vector<int> reversed(all.rbegin(), all.rend());
      append_bond_gates(step.bond_gates, terms, f, all, dt / 2);
      append_bond_gates(step.bond_gates, terms, f, reversed, dt / 2);
    }
  }
  return step;
}

TrotterStep layered_step(const HamiltonianTerms& terms, double dt, GateOrdering ordering) {
  if (!terms.nearest_neighbour_only())
    throw std::invalid_argument("layered_step: nearest-neighbour terms required");

  TrotterStep step;
  step.n = terms.n;
  step.dt = dt;
  step.ordering = ordering;
  step.order = 1;

  for (const auto& t : terms.x)
    step.site_gates.push_back({t.site, one_site_exponential(t.coeff, 0.0, dt)});
  for (const auto& t : terms.z) {
    if (t.coeff == 0.0) continue;
    step.site_gates.push_back({t.site, one_site_exponential(0.0, t.coeff, dt)});
  }

  std::vector<int> bonds;
  if (ordering == GateOrdering::EvenOdd) {
    for (int b = 0; b + 1 < terms.n; b += 2) bonds.push_back(b);
    for (int b = 1; b + 1 < terms.n; b += 2) bonds.push_back(b);
  } else {
    for (int b = 0; b + 1 < terms.n; ++b) bonds.push_back(b);
  }
  for (int b : bonds)
    step.bond_gates.push_back({b, bond_exponential(bond_coeff(terms, b), 0, 0, 0, 0, dt)});
  return step;
}

void apply_step_dense(PureState& state, const TrotterStep& step) {
  for (const auto& g : step.site_gates) apply_one_site_dense(state.amp, g.site, g.u);
  for (const auto& g : step.bond_gates) apply_two_site_dense(state.amp, g.left_site, g.u);
}

Eigen::MatrixXcd step_unitary_dense(const TrotterStep& step, const DenseLimits& lim) {
  if (step.n > lim.max_matrix_sites)
    throw CapabilityError("step_unitary_dense: n exceeds the dense matrix limit");
  const std::uint64_t d = std::uint64_t(1) << step.n;
  Eigen::MatrixXcd u(d, d);
  PureState col;
  col.n = step.n;
  for (std::uint64_t s = 0; s < d; ++s) {
    col.amp = Eigen::VectorXcd::Zero(d);
    col.amp[s] = 1.0;
    apply_step_dense(col, step);
    u.col(s) = col.amp;
  }
  return u;
}

}
