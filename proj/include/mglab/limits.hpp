#ifndef MGLAB_LIMITS_HPP
#define MGLAB_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace mglab {

/// Hard caps for the exact/exhaustive computations. Everything in this
/// project is meant to run at desk scale; when a request would blow past a
/// cap the operation throws CapExceededError instead of silently degrading
/// to an approximation.
struct Limits {
  /// Max number of label vectors enumerated at once (concept enumeration,
  /// implicit-block expansion, restriction patterns).
  std::uint64_t max_enumeration = std::uint64_t{1} << 20;

  /// Max number of points a class view may have for VC-dimension scans.
  std::size_t max_vc_points = 20;

  /// Max number of k-subsets visited by one shattering-coefficient call.
  std::uint64_t max_subsets = 1'000'000;

  /// Max variable count for exhaustive truth-assignment enumeration.
  std::size_t max_bruteforce_vars = 24;
};

}  // namespace mglab

#endif  // MGLAB_LIMITS_HPP
