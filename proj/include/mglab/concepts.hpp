#ifndef MGLAB_CONCEPTS_HPP
#define MGLAB_CONCEPTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mglab/instance.hpp"
#include "mglab/limits.hpp"

namespace mglab {

/// A total ±1 labeling of the domain, in domain order.
using Concept = std::vector<Label>;

/// Outcome of consistent-concept search. When Consistent, witness maps each
/// group id to the id of a hypothesis agreeing with the concept on that
/// whole group (for a block, the agreeing function is the member matching
/// the concept on the block's free points). Empty groups are omitted from
/// the witness.
struct ErmResult {
  enum class Status { Consistent, Inconsistent, ConflictingSample };
  Status status;
  std::optional<Concept> concept_values;
  std::vector<std::pair<std::string, std::string>> witness;  // (group id, hypothesis id)
};

/// Membership in the group-realizable class: every group is matched by some
/// hypothesis on all of its points; empty groups are vacuously satisfied.
bool contains(const GroupFamily& groups, const HypothesisClass& hypotheses, const Concept& f);

/// All members of the class in lexicographic domain order (-1 before +1,
/// first point most significant). Requires 2^|domain| within the cap.
std::vector<Concept> enumerate_concepts(const GroupFamily& groups,
                                        const HypothesisClass& hypotheses,
                                        const FiniteDomain& domain,
                                        const Limits& limits = Limits{});

/// Search for a class member consistent with the sample: per-group
/// candidates are hypotheses compatible with in-group sample labels,
/// arc-consistency prunes pairs on group intersections, and backtracking
/// assigns a hypothesis to every nonempty group. Unconstrained points get
/// the sample label if sampled, else the chosen hypothesis's pinned value if
/// any covering group pins them, else +1.
ErmResult find_consistent(const GroupFamily& groups, const HypothesisClass& hypotheses,
                          const LabeledSample& sample, const FiniteDomain& domain);

/// True iff the witness pairs verify: each named hypothesis agrees with f on
/// every point of its group, and every nonempty group appears exactly once.
bool verify_witness(const GroupFamily& groups, const HypothesisClass& hypotheses,
                    const Concept& f, const ErmResult& result);

}  // namespace mglab

#endif  // MGLAB_CONCEPTS_HPP
