#include "ncg/sampler.hpp"

namespace ncg {

StateSampler::StateSampler(AlgebraShape shape, std::uint64_t seed,
                           std::optional<BlockId> pinned_block)
    : shape_(std::move(shape)), rng_(seed), pinned_(pinned_block) {
  if (pinned_) shape_.dim(*pinned_);  // label check
}

Vector StateSampler::gaussian(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng_.complex_normal();
  return v;
}

PureState StateSampler::sample() {
  const BlockId k = pinned_ ? *pinned_ : BlockId(1 + rng_.below(shape_.num_blocks()));
  return sample_in(k);
}

PureState StateSampler::sample_in(BlockId block) {
  return PureState(block, gaussian(shape_.dim(block)));
}

Vector StateSampler::sample_tangent(const Chart& chart) {
  const int n = chart.dim();
  if (n == 1) return Vector::Zero(1);
  Vector v = gaussian(n);
  v -= chart.base * chart.base.dot(v);
  const double norm = v.norm();
  if (norm <= 1e-12) return sample_tangent(chart);  // measure-zero retry
  return v / norm;
}

Chart StateSampler::sample_chart(BlockId block) {
  return Chart(block, gaussian(shape_.dim(block)));
}

}  // namespace ncg
