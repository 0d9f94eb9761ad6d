#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyperising/exact_engine.hpp"
#include "hyperising/model.hpp"

namespace hyperising {

enum class GateOrdering { EvenOdd, Sequential };

GateOrdering ordering_from_string(const std::string& s);
std::string to_string(GateOrdering o);

struct OneSiteGate {
  int site = 0;
  Eigen::Matrix2cd u;
};

// Two-site unitary on (left_site, left_site+1); fused index convention
// (bit of left_site+1) * 2 + (bit of left_site).
struct TwoSiteGate {
  int left_site = 0;
  Eigen::Matrix4cd u;
};

// One Trotter step as explicit unitary layers: site gates first, then the
// bond gates in listed order.
struct TrotterStep {
  int n = 0;
  double dt = 0.0;
  GateOrdering ordering = GateOrdering::EvenOdd;
  int order = 1;  // 1 = Lie-Trotter, 2 = Strang
  std::vector<OneSiteGate> site_gates;
  std::vector<TwoSiteGate> bond_gates;
};

/// TEBD gate construction: the one-site field terms are folded into the
/// adjacent bond gates (half to each neighbour, full share at the chain
/// ends), so a step consists of bond gates only. order = 2 symmetrizes the
/// even layer around the odd one (even/2, odd, even/2); Sequential ordering
/// sweeps the bonds left to right (order 2 appends the reversed half sweep).
TrotterStep tebd_step(const HamiltonianTerms& terms, double dt, GateOrdering ordering,
                      int order);

/// Device-style construction: explicit sigma^x and sigma^z rotation layers
/// followed by pure ZZ bond gates. This is the unitary the compiled circuit
/// implements, first order only.
TrotterStep layered_step(const HamiltonianTerms& terms, double dt, GateOrdering ordering);

/// Exact (gate-by-gate) application to a dense state.
void apply_step_dense(PureState& state, const TrotterStep& step);

/// Full-step unitary as a dense matrix; small n only (oracle use).
Eigen::MatrixXcd step_unitary_dense(const TrotterStep& step, const DenseLimits& lim = {});

}
