#ifndef MGLAB_EVALUATION_HPP
#define MGLAB_EVALUATION_HPP

#include <string>
#include <vector>

#include "mglab/instance.hpp"

namespace mglab {

/// Exact worst conditional error over positive-mass groups. skipped counts
/// zero-mass groups, which are never scored. Ties keep the earliest group.
struct WorstGroupError {
  double error = 0.0;
  std::string group_id;
  std::size_t skipped = 0;
};

/// predictions is a total ±1 vector in domain order. Requires a
/// deterministic target and at least one positive-mass group.
WorstGroupError worst_group_error(const std::vector<Label>& predictions,
                                  const FiniteInstance& inst);

/// Pr[f(x) != c*(x) | x in g], exact from the mass table. Requires positive
/// group mass and a deterministic target.
double conditional_error(const std::vector<Label>& predictions, const FiniteInstance& inst,
                         const Group& g);

/// Pr[f(x) != c*(x) and x in g], the joint in-group mistake mass.
double joint_mistake_mass(const std::vector<Label>& predictions, const FiniteInstance& inst,
                          const Group& g);

struct BestConstant {
  std::string group_id;
  Label label;
  double error_pos;  // conditional error of the constant +1
  double error_neg;  // conditional error of the constant -1
};

/// Per positive-mass group, the constant label minimizing expected
/// conditional error (ties take +1). Works for both deterministic targets
/// and label-probability fixtures; throws on a zero-mass group.
std::vector<BestConstant> best_constant_per_group(const FiniteInstance& inst);

}  // namespace mglab

#endif  // MGLAB_EVALUATION_HPP
