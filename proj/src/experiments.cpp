#include "mglab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mglab/bounds.hpp"
#include "mglab/combinatorics.hpp"
#include "mglab/concepts.hpp"
#include "mglab/errors.hpp"
#include "mglab/evaluation.hpp"
#include "mglab/improper.hpp"
#include "mglab/text.hpp"

namespace mglab {

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<Label> run_learner(const std::string& learner, const FiniteInstance& inst,
                               const LabeledSample& sample) {
  if (learner == "erm-concepts") {
    ErmResult result =
        find_consistent(inst.groups(), inst.hypotheses(), sample, inst.domain());
    if (result.status != ErmResult::Status::Consistent) {
      throw ValidationError(result.status == ErmResult::Status::Inconsistent
                                ? "no consistent concept"
                                : "conflicting sample");
    }
    return *result.concept_values;
  }
  if (learner == "improper") {
    return improper_learn(inst, sample, 0.5).predictions(inst.domain().size());
  }
  throw ValidationError("unknown learner '" + learner + "'");
}

}  // namespace

LabeledSample draw_sample(const FiniteInstance& inst, std::uint64_t n, Rng& rng) {
  const auto& target = inst.target();
  CategoricalSampler sampler(inst.mass());
  LabeledSample s;
  s.examples.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::size_t p = sampler.sample(rng);
    s.examples.emplace_back(static_cast<PointIndex>(p), target[p]);
  }
  return s;
}

LearningCurveTable learning_curve(const std::string& learner, const GeneratorSpec& spec,
                                  const std::vector<std::uint64_t>& n_grid,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (learner != "erm-concepts" && learner != "improper") {
    throw ValidationError("unknown learner '" + learner + "'");
  }
  if (n_grid.empty()) {
    throw ValidationError("the n grid must not be empty");
  }
  for (std::uint64_t n : n_grid) {
    if (n < 1 || (learner == "improper" && n < 2)) {
      throw ValidationError("grid sample sizes are too small for this learner");
    }
  }
  FiniteInstance inst = generate(spec);
  if (!inst.deterministic_target()) {
    throw NonRealizableFixtureError("learning curves need a deterministic target");
  }

  LearningCurveTable table;
  table.learner = learner;
  table.spec = spec.kind;
  table.seed = seed;
  double min_mass = 1.0;
  bool any_group = false;
  for (const auto& g : inst.groups().groups()) {
    const double gm = group_mass(inst, g);
    if (gm > 0.0) {
      any_group = true;
      min_mass = std::min(min_mass, gm);
    }
  }
  table.min_group_mass = any_group ? min_mass : 0.0;

  for (std::uint64_t n : n_grid) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      Rng rng(derive_seed(seed, n, trial));
      LabeledSample sample = draw_sample(inst, n, rng);
      try {
        std::vector<Label> predictions = run_learner(learner, inst, sample);
        WorstGroupError w = worst_group_error(predictions, inst);
        table.rows.push_back(CurveRow{n, trial, w.error, w.group_id});
      } catch (const ValidationError& e) {
        table.failures.push_back(CurveFailure{n, trial, e.what()});
      }
    }
  }
  return table;
}

RateFit fit_rate_exponent(const LearningCurveTable& table) {
  std::map<std::uint64_t, std::vector<double>> by_n;
  for (const auto& row : table.rows) by_n[row.n].push_back(row.worst_group_error);

  std::vector<double> xs, ys;
  for (const auto& [n, errors] : by_n) {
    const double med = median(errors);
    if (med > 0.0) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(med));
    }
  }
  if (xs.size() < 3) {
    throw ValidationError("insufficient positive medians for a rate fit (need 3, have " +
                          std::to_string(xs.size()) + ")");
  }
  const std::size_t k = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    fit.residual += r * r;
  }
  return fit;
}

std::string curve_csv(const LearningCurveTable& table) {
  std::string out = "n,trial,worst_group_error,worst_group_id\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.trial);
    out += ',';
    out += format_double(row.worst_group_error);
    out += ',';
    out += row.worst_group_id;
    out += '\n';
  }
  return out;
}

Lemma1Result lemma1_coverage(const GeneratorSpec& spec, std::uint64_t n, double delta,
                             std::uint64_t trials, std::uint64_t seed, const Limits& limits) {
  if (n < 1) {
    throw ValidationError("coverage needs n >= 1");
  }
  if (trials < 1) {
    throw ValidationError("coverage needs at least 1 trial");
  }
  FiniteInstance inst = generate(spec);
  const std::size_t num_points = inst.domain().size();
  BinaryClassView view = view_of_hypotheses(inst.domain(), inst.hypotheses(), limits);
  if (view.num_patterns() == 0) {
    throw ValidationError("coverage needs a nonempty hypothesis class");
  }

  Lemma1Result result;
  result.shatter2n = shattering_coefficient(view, 2 * n, limits);
  result.alpha = alpha_n(n, result.shatter2n, delta);
  const double sqrt_alpha = std::sqrt(result.alpha);

  std::vector<double> exact_mass(view.num_patterns(), 0.0);
  for (std::size_t f = 0; f < view.num_patterns(); ++f) {
    const std::uint64_t pat = view.patterns()[f];
    for (std::size_t p = 0; p < num_points; ++p) {
      if ((pat >> p) & 1) exact_mass[f] += inst.mass()[p];
    }
  }

  CategoricalSampler sampler(inst.mass());
  std::uint64_t violated = 0;
  std::vector<std::uint64_t> counts(num_points);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t i = 0; i < n; ++i) ++counts[sampler.sample(rng)];
    bool bad = false;
    for (std::size_t f = 0; f < view.num_patterns() && !bad; ++f) {
      if (exact_mass[f] <= 0.0) continue;  // Pf = 0 never violates
      const std::uint64_t pat = view.patterns()[f];
      std::uint64_t hits = 0;
      for (std::size_t p = 0; p < num_points; ++p) {
        if ((pat >> p) & 1) hits += counts[p];
      }
      const double empirical = static_cast<double>(hits) / static_cast<double>(n);
      if ((exact_mass[f] - empirical) / std::sqrt(exact_mass[f]) > sqrt_alpha) {
        bad = true;
      }
    }
    if (bad) ++violated;
  }
  result.violation_fraction = static_cast<double>(violated) / static_cast<double>(trials);
  return result;
}

InstanceDims instance_dims(const FiniteInstance& inst, const Limits& limits) {
  InstanceDims dims;
  dims.dim_groups = vc_dimension(view_of_groups(inst.domain(), inst.groups()), limits);
  for (const auto& g : inst.groups().groups()) {
    if (g.empty()) continue;
    auto patterns = restrict_class(inst.hypotheses(), g, limits);
    dims.dim_sup_group =
        std::max(dims.dim_sup_group, vc_dimension(view_of_labelings(patterns), limits));
  }
  return dims;
}

CoverageResult forall_bound_coverage(const FiniteInstance& inst, std::uint64_t n, double delta,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const Limits& limits) {
  InstanceDims dims = instance_dims(inst, limits);
  CoverageResult result;
  result.trials = trials;
  result.bound = forall_bound(n, dims.dim_groups, dims.dim_sup_group, delta);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    LabeledSample sample = draw_sample(inst, n, rng);
    ErmResult erm = find_consistent(inst.groups(), inst.hypotheses(), sample, inst.domain());
    if (erm.status != ErmResult::Status::Consistent) {
      ++result.violations;  // cannot happen on a realizable instance
      continue;
    }
    bool bad = false;
    for (const auto& g : inst.groups().groups()) {
      if (group_mass(inst, g) <= 0.0) continue;
      if (joint_mistake_mass(*erm.concept_values, inst, g) > result.bound) {
        bad = true;
        break;
      }
    }
    if (bad) ++result.violations;
  }
  return result;
}

}  // namespace mglab
