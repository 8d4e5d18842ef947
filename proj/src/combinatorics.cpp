#include "mglab/combinatorics.hpp"

#include <algorithm>
#include <cmath>

#include "mglab/errors.hpp"

namespace mglab {

namespace {

// C(n, k) without overflow for the subset-cap check: saturates at cap+1.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > cap) return cap + 1;
    // result * (n - k + i) stays exact: result <= cap and factors are modest.
    BigInt wide = BigInt(result) * (n - k + i) / i;
    if (wide > cap) return cap + 1;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

}  // namespace

BinaryClassView::BinaryClassView(std::size_t num_points, std::vector<std::uint64_t> patterns)
    : num_points_(num_points), patterns_(std::move(patterns)) {
  if (num_points_ > 64) {
    throw CapExceededError("class views support at most 64 points");
  }
  const std::uint64_t mask = num_points_ == 0      ? 0
                             : num_points_ == 64 ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << num_points_) - 1);
  for (std::uint64_t p : patterns_) {
    if ((p & ~mask) != 0) {
      throw ValidationError("pattern has bits beyond the point count");
    }
  }
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

BinaryClassView view_of_groups(const FiniteDomain& domain, const GroupFamily& groups) {
  std::vector<std::uint64_t> patterns;
  patterns.reserve(groups.size());
  for (const auto& g : groups.groups()) {
    std::uint64_t bits = 0;
    for (PointIndex p : g.members()) bits |= std::uint64_t{1} << p;
    patterns.push_back(bits);
  }
  return BinaryClassView(domain.size(), std::move(patterns));
}

BinaryClassView view_of_hypotheses(const FiniteDomain& domain, const HypothesisClass& hypotheses,
                                   const Limits& limits) {
  const std::size_t n = domain.size();
  std::vector<std::uint64_t> patterns;
  std::uint64_t generated = 0;
  for (const auto& h : hypotheses.members()) {
    const auto& free_pts = h.free_points();
    if (free_pts.size() >= 63) {
      throw CapExceededError("block '" + h.id() + "' is too large to enumerate");
    }
    const std::uint64_t count = std::uint64_t{1} << free_pts.size();
    generated += count;
    if (generated > limits.max_enumeration) {
      throw CapExceededError("hypothesis enumeration exceeds the configured cap");
    }
    std::uint64_t base = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (h.fixed_value(static_cast<PointIndex>(p)) == 1) base |= std::uint64_t{1} << p;
    }
    for (std::uint64_t m = 0; m < count; ++m) {
      std::uint64_t bits = base;
      for (std::size_t j = 0; j < free_pts.size(); ++j) {
        if ((m >> j) & 1) bits |= std::uint64_t{1} << free_pts[j];
      }
      patterns.push_back(bits);
    }
  }
  return BinaryClassView(n, std::move(patterns));
}

BinaryClassView view_of_labelings(const std::vector<std::vector<Label>>& rows) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint64_t> patterns;
  patterns.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw ValidationError("labeling rows must all have the same length");
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 1) bits |= std::uint64_t{1} << j;
    }
    patterns.push_back(bits);
  }
  return BinaryClassView(n, std::move(patterns));
}

std::uint64_t shattering_coefficient(const BinaryClassView& view, std::size_t k,
                                     const Limits& limits) {
  if (k == 0) {
    throw ValidationError("shattering coefficient needs k >= 1");
  }
  const std::size_t n = view.num_points();
  if (view.num_patterns() == 0) return 0;
  k = std::min(k, n == 0 ? std::size_t{1} : n);
  if (n == 0) return 1;  // the single empty pattern
  if (binom_capped(n, k, limits.max_subsets) > limits.max_subsets) {
    throw CapExceededError("subset enumeration exceeds the configured cap");
  }

  const std::uint64_t saturation = k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << k);
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  std::uint64_t best = 0;
  std::vector<std::uint64_t> induced;
  induced.reserve(view.num_patterns());
  while (true) {
    induced.clear();
    for (std::uint64_t pat : view.patterns()) {
      std::uint64_t sub = 0;
      for (std::size_t i = 0; i < k; ++i) sub |= ((pat >> subset[i]) & 1) << i;
      induced.push_back(sub);
    }
    std::sort(induced.begin(), induced.end());
    induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
    best = std::max<std::uint64_t>(best, induced.size());
    if (best >= saturation) return best;

    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return best;
}

std::size_t vc_dimension(const BinaryClassView& view, const Limits& limits) {
  if (view.num_points() > limits.max_vc_points) {
    throw CapExceededError("VC computation over " + std::to_string(view.num_points()) +
                           " points exceeds the configured cap of " +
                           std::to_string(limits.max_vc_points));
  }
  if (view.num_patterns() <= 1 || view.num_points() == 0) return 0;
  std::size_t d = 0;
  for (std::size_t k = 1; k <= view.num_points(); ++k) {
    // 2^63 patterns cannot exist in memory, so k is always far below 63 here.
    if (k >= 63) break;
    if ((std::uint64_t{1} << k) > view.num_patterns()) break;
    if (shattering_coefficient(view, k, limits) == (std::uint64_t{1} << k)) {
      d = k;
    } else {
      break;  // a subset of a shattered set is shattered
    }
  }
  return d;
}

BigInt sauer_bound(std::uint64_t k, std::uint64_t d) {
  BigInt sum = 1;   // C(k, 0)
  BigInt term = 1;
  const std::uint64_t top = std::min(d, k);
  for (std::uint64_t i = 1; i <= top; ++i) {
    term = term * (k - i + 1) / i;  // exact: consecutive binomials
    sum += term;
  }
  return sum;
}

double log_big(const BigInt& x) {
  if (x <= 0) {
    throw ValidationError("log of a non-positive integer");
  }
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits <= 52) {
    return std::log(x.convert_to<double>());
  }
  const std::size_t shift = bits - 52;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * 0.6931471805599453;
}

}  // namespace mglab
