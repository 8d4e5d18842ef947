#include "mglab/bounds.hpp"

#include <cmath>

#include "mglab/combinatorics.hpp"
#include "mglab/errors.hpp"

namespace mglab {

namespace {

void check_prob(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw ValidationError(std::string(what) + " must lie in (0,1)");
  }
}

double log_sauer(std::uint64_t k, std::uint64_t d) { return log_big(sauer_bound(k, d)); }

double gamma_eps(const BoundParams& p) {
  check_prob(p.delta, "delta");
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) {
    throw ValidationError("epsilon must lie in (0,1)");
  }
  if (!(p.gamma > 0.0 && p.gamma <= 1.0)) {
    throw ValidationError("gamma must lie in (0,1]");
  }
  if (!(p.big_c > 0.0)) {
    throw ValidationError("the leading constant must be positive");
  }
  const double ge = p.gamma * p.epsilon;
  if (ge >= 1.0) {
    throw ValidationError("gamma * epsilon must be below 1");
  }
  return ge;
}

std::uint64_t ceil_count(double v) {
  double c = std::ceil(v);
  if (!(c >= 0.0) || c > 9.007199254740992e15) {
    throw ValidationError("sample size out of representable range");
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

double alpha_n(std::uint64_t n, std::uint64_t shatter2n, double delta) {
  if (n < 1) {
    throw ValidationError("alpha_n needs n >= 1");
  }
  if (shatter2n < 1) {
    throw ValidationError("alpha_n needs a shattering coefficient >= 1");
  }
  check_prob(delta, "delta");
  return (4.0 / static_cast<double>(n)) *
         std::log(4.0 * static_cast<double>(shatter2n) / delta);
}

double foreach_bound(std::uint64_t n, std::uint64_t dim_per_group, double delta) {
  if (n < 1) {
    throw ValidationError("foreach_bound needs n >= 1");
  }
  check_prob(delta, "delta");
  return 4.0 * (log_sauer(2 * n, dim_per_group) + std::log(4.0 / delta)) /
         static_cast<double>(n);
}

double forall_bound(std::uint64_t n, std::uint64_t dim_groups, std::uint64_t dim_sup_group,
                    double delta) {
  if (n < 1) {
    throw ValidationError("forall_bound needs n >= 1");
  }
  check_prob(delta, "delta");
  return 4.0 *
         (log_sauer(2 * n, dim_groups) + log_sauer(2 * n, dim_sup_group) +
          std::log(4.0 / delta)) /
         static_cast<double>(n);
}

std::uint64_t sample_size_vc(const BoundParams& p) {
  const double ge = gamma_eps(p);
  const double dims = static_cast<double>(p.dim_sup_group + p.dim_groups);
  const double value =
      p.big_c * (dims * std::log(1.0 / ge) + std::log(1.0 / p.delta)) / ge;
  return ceil_count(value);
}

std::uint64_t sample_size_cardinality(const BoundParams& p) {
  const double ge = gamma_eps(p);
  if (p.card_groups < 1) {
    throw ValidationError("the group count must be at least 1");
  }
  const double value = p.big_c *
                       (static_cast<double>(p.dim_per_group) * std::log(1.0 / ge) +
                        std::log(static_cast<double>(p.card_groups)) +
                        std::log(1.0 / p.delta)) /
                       ge;
  return ceil_count(value);
}

}  // namespace mglab
