#ifndef MGLAB_COMBINATORICS_HPP
#define MGLAB_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "mglab/concepts.hpp"
#include "mglab/instance.hpp"
#include "mglab/limits.hpp"

namespace mglab {

using BigInt = boost::multiprecision::cpp_int;

/// Deduplicated label vectors over an ordered point list, packed one bit per
/// point (bit j set = positive label / membership at point j). At most 64
/// points per view.
class BinaryClassView {
 public:
  BinaryClassView(std::size_t num_points, std::vector<std::uint64_t> patterns);

  std::size_t num_points() const { return num_points_; }
  std::size_t num_patterns() const { return patterns_.size(); }
  const std::vector<std::uint64_t>& patterns() const { return patterns_; }

 private:
  std::size_t num_points_;
  std::vector<std::uint64_t> patterns_;  // sorted, deduplicated
};

/// Groups as 0/1 indicator vectors over the domain.
BinaryClassView view_of_groups(const FiniteDomain& domain, const GroupFamily& groups);

/// All functions the class denotes (blocks expanded, subject to
/// limits.max_enumeration), bit set where the value is +1.
BinaryClassView view_of_hypotheses(const FiniteDomain& domain, const HypothesisClass& hypotheses,
                                   const Limits& limits = Limits{});

/// An enumerated concept list or restriction patterns as a view.
BinaryClassView view_of_labelings(const std::vector<std::vector<Label>>& rows);

/// Largest number of distinct induced sub-patterns over any k-subset of
/// points. k beyond the point count is clamped to it: repeating points in a
/// tuple never adds distinct patterns, so the supremum over k-tuples is
/// reached on distinct points. Enumeration is capped by limits.max_subsets.
std::uint64_t shattering_coefficient(const BinaryClassView& view, std::size_t k,
                                     const Limits& limits = Limits{});

/// Largest k whose shattering coefficient is 2^k; 0 when no single point is
/// shattered. Views over more than limits.max_vc_points points are refused.
std::size_t vc_dimension(const BinaryClassView& view, const Limits& limits = Limits{});

/// Sum of binomial coefficients C(k, 0..min(d,k)), exact.
BigInt sauer_bound(std::uint64_t k, std::uint64_t d);

/// Natural log of a positive big integer, via the top 53 bits plus the
/// discarded shift.
double log_big(const BigInt& x);

}  // namespace mglab

#endif  // MGLAB_COMBINATORICS_HPP
