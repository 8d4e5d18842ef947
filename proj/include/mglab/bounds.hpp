#ifndef MGLAB_BOUNDS_HPP
#define MGLAB_BOUNDS_HPP

#include <cstdint>

namespace mglab {

/// Inputs to the sample-size formulas. Dimensions are exact VC dimensions of
/// the relevant classes; big_c is the leading constant, default 4 to match
/// the error bounds' factor.
struct BoundParams {
  std::uint64_t n = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
  std::uint64_t dim_per_group = 0;   // VC dim of H restricted to one group
  std::uint64_t dim_groups = 0;      // VC dim of the group family
  std::uint64_t dim_sup_group = 0;   // sup over groups of per-group dims
  std::uint64_t card_groups = 0;     // |G|
  double big_c = 4.0;
};

/// (4/n) * ln(4 * shatter2n / delta): the uniform relative-deviation radius
/// for a class whose 2n-th shattering coefficient is shatter2n.
double alpha_n(std::uint64_t n, std::uint64_t shatter2n, double delta);

/// Joint mistake-mass bound holding per group:
/// 4 * (ln(sauer(2n, dim_per_group)) + ln(4/delta)) / n.
double foreach_bound(std::uint64_t n, std::uint64_t dim_per_group, double delta);

/// Joint mistake-mass bound holding simultaneously for all groups:
/// 4 * (ln(sauer(2n, dim_groups)) + ln(sauer(2n, dim_sup_group)) + ln(4/delta)) / n.
double forall_bound(std::uint64_t n, std::uint64_t dim_groups, std::uint64_t dim_sup_group,
                    double delta);

/// ceil(big_c * ((dim_sup_group + dim_groups) * ln(1/(gamma*eps)) + ln(1/delta))
///      / (gamma*eps)). Requires gamma*epsilon < 1.
std::uint64_t sample_size_vc(const BoundParams& p);

/// ceil(big_c * (dim_per_group * ln(1/(gamma*eps)) + ln(card_groups) + ln(1/delta))
///      / (gamma*eps)). Requires gamma*epsilon < 1 and card_groups >= 1.
std::uint64_t sample_size_cardinality(const BoundParams& p);

}  // namespace mglab

#endif  // MGLAB_BOUNDS_HPP
