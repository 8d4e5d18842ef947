#include "mglab/evaluation.hpp"

#include "mglab/errors.hpp"

namespace mglab {

namespace {

void check_predictions(const std::vector<Label>& predictions, const FiniteInstance& inst) {
  if (predictions.size() != inst.domain().size()) {
    throw ValidationError("predictions must cover the whole domain");
  }
  for (Label v : predictions) {
    if (v != -1 && v != 1) {
      throw ValidationError("predictions must be ±1");
    }
  }
}

}  // namespace

double joint_mistake_mass(const std::vector<Label>& predictions, const FiniteInstance& inst,
                          const Group& g) {
  check_predictions(predictions, inst);
  const auto& target = inst.target();
  double sum = 0.0;
  for (PointIndex p : g.members()) {
    if (predictions[p] != target[p]) sum += inst.mass()[p];
  }
  return sum;
}

double conditional_error(const std::vector<Label>& predictions, const FiniteInstance& inst,
                         const Group& g) {
  const double gm = group_mass(inst, g);
  if (gm <= 0.0) {
    throw ValidationError("conditional error undefined for zero-mass group '" + g.id() + "'");
  }
  return joint_mistake_mass(predictions, inst, g) / gm;
}

WorstGroupError worst_group_error(const std::vector<Label>& predictions,
                                  const FiniteInstance& inst) {
  check_predictions(predictions, inst);
  const auto& target = inst.target();  // rejects probabilistic fixtures
  WorstGroupError out;
  bool scored = false;
  for (const auto& g : inst.groups().groups()) {
    const double gm = group_mass(inst, g);
    if (gm <= 0.0) {
      ++out.skipped;
      continue;
    }
    double joint = 0.0;
    for (PointIndex p : g.members()) {
      if (predictions[p] != target[p]) joint += inst.mass()[p];
    }
    const double err = joint / gm;
    if (!scored || err > out.error) {
      out.error = err;
      out.group_id = g.id();
      scored = true;
    }
  }
  if (!scored) {
    throw ValidationError("no positive-mass group to score");
  }
  return out;
}

std::vector<BestConstant> best_constant_per_group(const FiniteInstance& inst) {
  std::vector<BestConstant> out;
  for (const auto& g : inst.groups().groups()) {
    const double gm = group_mass(inst, g);
    if (gm <= 0.0) {
      throw ValidationError("best constant undefined for zero-mass group '" + g.id() + "'");
    }
    double err_pos = 0.0;  // expected mistake mass of the constant +1
    double err_neg = 0.0;
    for (PointIndex p : g.members()) {
      const double m = inst.mass()[p];
      const double p_pos = inst.deterministic_target()
                               ? (inst.target()[p] == 1 ? 1.0 : 0.0)
                               : inst.label_prob()[p];
      err_pos += m * (1.0 - p_pos);
      err_neg += m * p_pos;
    }
    err_pos /= gm;
    err_neg /= gm;
    out.push_back(BestConstant{g.id(), err_pos <= err_neg ? Label{1} : Label{-1}, err_pos,
                               err_neg});
  }
  return out;
}

}  // namespace mglab
