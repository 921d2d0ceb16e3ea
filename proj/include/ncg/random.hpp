// Deterministic random sources.
//
// Everything here is hand-specified (SplitMix64 + Box-Muller) rather than
// delegated to <random> distributions, so that a given seed produces the
// same stream on every platform and standard-library version.  Reports
// produced by the harness are byte-compared across runs; that only works
// if the sampling layer is bit-stable.
#pragma once

#include <cstdint>
#include <string_view>

#include "ncg/common.hpp"

namespace ncg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // SplitMix64 step.
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on (0,1); never returns an exact endpoint.
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one value per call, no cached spare).
  double normal();

  // Real and imaginary parts are independent standard normals.
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  // Uniform integer in [0, n).  n must be positive; bias is < 2^-53.
  int below(int n) { return static_cast<int>(uniform() * n); }

 private:
  std::uint64_t state_;
};

// Stable per-case seed: mixes a root seed, a textual label and an index.
// Used by the harness so that independent cases can run in any order (or
// in parallel) without sharing generator state.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index);

}  // namespace ncg
