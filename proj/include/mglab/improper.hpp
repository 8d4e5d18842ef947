#ifndef MGLAB_IMPROPER_HPP
#define MGLAB_IMPROPER_HPP

#include <string>
#include <utility>
#include <vector>

#include "mglab/instance.hpp"

namespace mglab {

/// One sleeping expert per nonempty group: a hypothesis fitted on the first
/// half and a weight driven down multiplicatively by second-half mistakes.
struct Expert {
  std::uint32_t group_index;
  Hypothesis hypothesis;  // explicit; id names the source hypothesis
  double weight = 1.0;
};

using ExpertTable = std::vector<Expert>;

/// Weighted-majority over awake experts; ties and points outside every
/// group get +1.
class EnsembleClassifier {
 public:
  EnsembleClassifier(GroupFamily groups, ExpertTable experts);

  Label predict(PointIndex x) const;
  const ExpertTable& experts() const { return experts_; }

  /// Predictions over the whole domain, in domain order.
  std::vector<Label> predictions(std::size_t domain_size) const;

 private:
  GroupFamily groups_;
  ExpertTable experts_;
};

/// First ceil(n/2) examples and the remainder, order preserved. Requires at
/// least two examples.
std::pair<LabeledSample, LabeledSample> split_sample(const LabeledSample& s);

/// For each nonempty group, the first hypothesis (class order; members of a
/// block ordered with +1 first on free points) consistent with the in-group
/// examples. Throws NoConsistentHypothesisError naming the first group whose
/// in-group examples contradict the whole class.
ExpertTable fit_group_hypotheses(const GroupFamily& groups, const HypothesisClass& hypotheses,
                                 const LabeledSample& first);

/// Multiplicative-weights pass over the second half: every awake expert that
/// errs on an example is scaled by (1 - eta).
ExpertTable ensemble_train(const GroupFamily& groups, ExpertTable experts,
                           const LabeledSample& second, double eta);

/// Split, fit, train; the classifier keeps the terminal weights.
EnsembleClassifier improper_learn(const FiniteInstance& inst, const LabeledSample& s, double eta);

}  // namespace mglab

#endif  // MGLAB_IMPROPER_HPP
