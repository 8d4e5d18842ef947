#include "mglab/rng.hpp"

#include "mglab/errors.hpp"

namespace mglab {

CategoricalSampler::CategoricalSampler(const std::vector<double>& mass) {
  if (mass.empty()) {
    throw ValidationError("categorical sampler needs a nonempty mass vector");
  }
  cdf_.reserve(mass.size());
  double acc = 0.0;
  for (double m : mass) {
    if (m < 0.0) {
      throw ValidationError("categorical sampler mass entries must be nonnegative");
    }
    acc += m;
    cdf_.push_back(acc);
  }
  if (acc <= 0.0) {
    throw ValidationError("categorical sampler total mass must be positive");
  }
  // Normalize so the final entry is exactly 1; guards the binary search.
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
}

std::size_t CategoricalSampler::sample(Rng& rng) const {
  const double u = rng.next_double();
  // First index whose cdf exceeds u.
  std::size_t lo = 0, hi = cdf_.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (cdf_[mid] <= u) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace mglab
