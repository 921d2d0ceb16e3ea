#include "ncg/random.hpp"

#include <cmath>
#include <numbers>

namespace ncg {

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index) {
  // FNV-1a over the root bytes, the label and the index, then one SplitMix64
  // finalization so that nearby inputs land far apart.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto eat = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h = (h ^ (v & 0xffu)) * 0x100000001b3ull;
      v >>= 8;
    }
  };
  eat(root);
  for (unsigned char c : label) h = (h ^ c) * 0x100000001b3ull;
  eat(index);
  Rng finisher(h);
  return finisher.next();
}

}  // namespace ncg
