// Seeded sources of random pure states and chart data.
#pragma once

#include <cstdint>
#include <optional>

#include "ncg/geometry.hpp"
#include "ncg/random.hpp"

namespace ncg {

// Draws pure states of a fixed algebra shape: block uniform (unless pinned),
// vector a normalized complex Gaussian.  The sampler owns its generator, so
// one sampler must not be shared across concurrent tasks.
class StateSampler {
 public:
  StateSampler(AlgebraShape shape, std::uint64_t seed,
               std::optional<BlockId> pinned_block = std::nullopt);

  const AlgebraShape& shape() const { return shape_; }

  PureState sample();
  PureState sample_in(BlockId block);

  // Unit Gaussian direction in H_h (zero-length for one-dimensional blocks).
  Vector sample_tangent(const Chart& chart);

  // Chart with a Gaussian base point in the given block.
  Chart sample_chart(BlockId block);

  Rng& rng() { return rng_; }

 private:
  Vector gaussian(int n);

  AlgebraShape shape_;
  Rng rng_;
  std::optional<BlockId> pinned_;
};

}  // namespace ncg
