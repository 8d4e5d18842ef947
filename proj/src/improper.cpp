#include "mglab/improper.hpp"

#include "mglab/errors.hpp"

namespace mglab {

EnsembleClassifier::EnsembleClassifier(GroupFamily groups, ExpertTable experts)
    : groups_(std::move(groups)), experts_(std::move(experts)) {}

Label EnsembleClassifier::predict(PointIndex x) const {
  double vote = 0.0;
  bool awake = false;
  for (const auto& e : experts_) {
    if (!groups_.group(e.group_index).contains(x)) continue;
    awake = true;
    vote += e.weight * static_cast<double>(e.hypothesis.fixed_value(x));
  }
  if (!awake) return 1;
  return vote >= 0.0 ? Label{1} : Label{-1};
}

std::vector<Label> EnsembleClassifier::predictions(std::size_t domain_size) const {
  std::vector<Label> out(domain_size);
  for (std::size_t p = 0; p < domain_size; ++p) {
    out[p] = predict(static_cast<PointIndex>(p));
  }
  return out;
}

std::pair<LabeledSample, LabeledSample> split_sample(const LabeledSample& s) {
  if (s.size() < 2) {
    throw ValidationError("sample split needs at least 2 examples");
  }
  const std::size_t cut = (s.size() + 1) / 2;
  LabeledSample first, second;
  first.examples.assign(s.examples.begin(), s.examples.begin() + static_cast<std::ptrdiff_t>(cut));
  second.examples.assign(s.examples.begin() + static_cast<std::ptrdiff_t>(cut), s.examples.end());
  return {std::move(first), std::move(second)};
}

ExpertTable fit_group_hypotheses(const GroupFamily& groups, const HypothesisClass& hypotheses,
                                 const LabeledSample& first) {
  ExpertTable table;
  for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
    const Group& g = groups.group(gi);
    if (g.empty()) continue;

    std::vector<std::pair<PointIndex, Label>> constraints;
    bool conflict = false;
    for (auto [p, y] : first.examples) {
      if (!g.contains(p)) continue;
      bool found = false;
      for (auto& [cp, cy] : constraints) {
        if (cp == p) {
          found = true;
          if (cy != y) conflict = true;
          break;
        }
      }
      if (!found) constraints.emplace_back(p, y);
    }
    if (conflict) {
      throw NoConsistentHypothesisError(g.id());
    }

    const Hypothesis* chosen = nullptr;
    for (const auto& h : hypotheses.members()) {
      if (h.compatible(constraints)) {
        chosen = &h;
        break;
      }
    }
    if (chosen == nullptr) {
      throw NoConsistentHypothesisError(g.id());
    }

    // First consistent member of the block: pinned values, then the in-group
    // sample labels on free points, +1 on the rest.
    std::vector<Label> values = chosen->fixed_values();
    for (std::size_t p = 0; p < values.size(); ++p) {
      if (values[p] == 0) values[p] = 1;
    }
    for (auto [p, y] : constraints) {
      if (chosen->fixed_value(p) == 0) values[p] = y;
    }
    table.push_back(Expert{gi, Hypothesis::explicit_fn(chosen->id(), std::move(values)), 1.0});
  }
  return table;
}

ExpertTable ensemble_train(const GroupFamily& groups, ExpertTable experts,
                           const LabeledSample& second, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw ValidationError("eta must lie in (0,1)");
  }
  for (auto [x, y] : second.examples) {
    for (auto& e : experts) {
      if (!groups.group(e.group_index).contains(x)) continue;
      if (e.hypothesis.fixed_value(x) != y) {
        e.weight *= 1.0 - eta;
      }
    }
  }
  return experts;
}

EnsembleClassifier improper_learn(const FiniteInstance& inst, const LabeledSample& s,
                                  double eta) {
  auto [first, second] = split_sample(s);
  ExpertTable experts = fit_group_hypotheses(inst.groups(), inst.hypotheses(), first);
  experts = ensemble_train(inst.groups(), std::move(experts), second, eta);
  return EnsembleClassifier(inst.groups(), std::move(experts));
}

}  // namespace mglab
