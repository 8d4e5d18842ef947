#ifndef MGLAB_EXPERIMENTS_HPP
#define MGLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mglab/generators.hpp"
#include "mglab/instance.hpp"
#include "mglab/limits.hpp"
#include "mglab/rng.hpp"

namespace mglab {

struct CurveRow {
  std::uint64_t n;
  std::uint64_t trial;
  double worst_group_error;
  std::string worst_group_id;
};

struct CurveFailure {
  std::uint64_t n;
  std::uint64_t trial;
  std::string message;
};

struct LearningCurveTable {
  std::string learner;
  std::string spec;
  std::uint64_t seed = 0;
  double min_group_mass = 0.0;
  std::vector<CurveRow> rows;          // successes only, in (n, trial) order
  std::vector<CurveFailure> failures;  // trials whose learner threw
};

/// Least-squares line through (ln n, ln median-error).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // sum of squared residuals
};

/// n i.i.d. draws from the instance's mass, labeled by the deterministic
/// target.
LabeledSample draw_sample(const FiniteInstance& inst, std::uint64_t n, Rng& rng);

/// Train-and-score grid: learner is "erm-concepts" (consistent-concept
/// search; its concept is the classifier) or "improper" (the split/fit/
/// weighted-majority pipeline with eta = 1/2). Each (n, trial) cell draws
/// with the seed derived from (seed, n, trial) and records the exact worst
/// conditional error; learner exceptions become failure records.
LearningCurveTable learning_curve(const std::string& learner, const GeneratorSpec& spec,
                                  const std::vector<std::uint64_t>& n_grid,
                                  std::uint64_t trials, std::uint64_t seed);

/// Fits ln(median error) against ln(n) over grid values with positive median
/// error; requires at least three such values.
RateFit fit_rate_exponent(const LearningCurveTable& table);

std::string curve_csv(const LearningCurveTable& table);

struct Lemma1Result {
  std::uint64_t shatter2n = 0;
  double alpha = 0.0;
  double violation_fraction = 0.0;
};

/// Empirical coverage of the relative-deviation inequality for the
/// generated instance's hypothesis class, viewed as 0/1 functions (1 where
/// the hypothesis is +1): the fraction of trials in which some member f has
/// (Pf - P_n f) / sqrt(Pf) > sqrt(alpha_n), with Pf exact from the mass
/// table and Pf = 0 never violating.
Lemma1Result lemma1_coverage(const GeneratorSpec& spec, std::uint64_t n, double delta,
                             std::uint64_t trials, std::uint64_t seed,
                             const Limits& limits = Limits{});

struct InstanceDims {
  std::size_t dim_groups = 0;     // VC dimension of the group family
  std::size_t dim_sup_group = 0;  // max over groups of VC(H restricted to g)
};

/// Exact dimensions needed by the simultaneous error bound.
InstanceDims instance_dims(const FiniteInstance& inst, const Limits& limits);

struct CoverageResult {
  double bound = 0.0;
  std::uint64_t violations = 0;
  std::uint64_t trials = 0;
};

/// Monte Carlo check of the simultaneous joint-mistake-mass bound: per
/// trial, draw n examples, find a consistent concept, and flag a violation
/// when some positive-mass group's joint mistake mass exceeds
/// forall_bound(n, dims, delta).
CoverageResult forall_bound_coverage(const FiniteInstance& inst, std::uint64_t n, double delta,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const Limits& limits);

}  // namespace mglab

#endif  // MGLAB_EXPERIMENTS_HPP
