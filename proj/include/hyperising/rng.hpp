#pragma once

#include <cstdint>
#include <random>

namespace hyperising {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Splittable counter scheme: the stream for (master, a, b) depends only on
// those three values, never on evaluation order, so repetition/site streams
// are reproducible regardless of how work is distributed over threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s = h ^ (a * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  h = splitmix64(s);
  s = h ^ (b * 0xd1b54a32d192ed03ULL + 0x94d049bb133111ebULL);
  return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
  return std::mt19937_64(derive_seed(master, a, b));
}

}
