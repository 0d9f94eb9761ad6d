#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "hyperising/errors.hpp"

namespace hyperising {

// Basis conventions used throughout:
//   * site i maps to bit i of the amplitude index (site 0 = least significant)
//   * |0> is the sigma^z = +1 ("up") state
enum class Pauli { X, Y, Z };

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -1i, 1i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Pauli pauli_from_string(const std::string& s) {
  if (s == "x" || s == "X") return Pauli::X;
  if (s == "y" || s == "Y") return Pauli::Y;
  if (s == "z" || s == "Z") return Pauli::Z;
  throw ConfigError("unknown Pauli operator '" + s + "' (expected x, y or z)");
}

inline std::string to_string(Pauli p) {
  switch (p) {
    case Pauli::X: return "x";
    case Pauli::Y: return "y";
    default: return "z";
  }
}

/// sigma^z eigenvalue of bit `site` in basis index `s`.
inline double z_sign(std::uint64_t s, int site) {
  return ((s >> site) & 1u) ? -1.0 : 1.0;
}

/// In-place application of a single-site Pauli to a dense amplitude vector.
inline void apply_pauli(Eigen::VectorXcd& amp, int site, Pauli p) {
  using namespace std::complex_literals;
  const std::uint64_t mask = std::uint64_t(1) << site;
  const std::uint64_t dim = static_cast<std::uint64_t>(amp.size());
  switch (p) {
    case Pauli::Z:
      for (std::uint64_t s = 0; s < dim; ++s)
        if (s & mask) amp[s] = -amp[s];
      break;
    case Pauli::X:
      for (std::uint64_t s = 0; s < dim; ++s)
        if (!(s & mask)) std::swap(amp[s], amp[s | mask]);
      break;
    case Pauli::Y:
      for (std::uint64_t s = 0; s < dim; ++s) {
        if (!(s & mask)) {
          auto a0 = amp[s];
          auto a1 = amp[s | mask];
          amp[s] = -1i * a1;
          amp[s | mask] = 1i * a0;
        }
      }
      break;
  }
}

/// In-place application of an arbitrary 2x2 operator at `site`.
inline void apply_one_site_dense(Eigen::VectorXcd& amp, int site, const Eigen::Matrix2cd& u) {
  const std::uint64_t mask = std::uint64_t(1) << site;
  const std::uint64_t dim = static_cast<std::uint64_t>(amp.size());
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (s & mask) continue;
    auto a0 = amp[s];
    auto a1 = amp[s | mask];
    amp[s] = u(0, 0) * a0 + u(0, 1) * a1;
    amp[s | mask] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

/// In-place application of a 4x4 operator on sites (site, site+1);
/// index convention: fused = (bit of site+1) * 2 + (bit of site).
inline void apply_two_site_dense(Eigen::VectorXcd& amp, int site, const Eigen::Matrix4cd& u) {
  const std::uint64_t lo = std::uint64_t(1) << site;
  const std::uint64_t hi = std::uint64_t(1) << (site + 1);
  const std::uint64_t dim = static_cast<std::uint64_t>(amp.size());
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (s & (lo | hi)) continue;
    Eigen::Vector4cd a(amp[s], amp[s | lo], amp[s | hi], amp[s | lo | hi]);
    Eigen::Vector4cd b = u * a;
    amp[s] = b[0];
    amp[s | lo] = b[1];
    amp[s | hi] = b[2];
    amp[s | lo | hi] = b[3];
  }
}

}
