#ifndef MGLAB_INSTANCE_HPP
#define MGLAB_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mglab/limits.hpp"

namespace mglab {

/// Labels are -1/+1; 0 marks "free" or "unsampled" in partial maps.
using Label = std::int8_t;

using PointIndex = std::uint32_t;

/// Ordered set of distinct opaque point identifiers. All enumeration in the
/// library follows this order, which is what makes every operation
/// deterministic. May be empty (the reduction of an empty formula has no
/// points).
class FiniteDomain {
 public:
  FiniteDomain() = default;
  explicit FiniteDomain(std::vector<std::string> points);

  std::size_t size() const { return points_.size(); }
  const std::string& point(PointIndex i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }

  /// Index of a point name; throws ValidationError if unknown.
  PointIndex index_of(const std::string& name) const;
  std::optional<PointIndex> find(const std::string& name) const;

 private:
  std::vector<std::string> points_;
};

/// A subset of the domain, identified by name. Members are kept sorted in
/// domain order. May be empty; empty groups impose no constraints anywhere.
class Group {
 public:
  Group(std::string id, std::vector<PointIndex> members, const FiniteDomain& domain);

  const std::string& id() const { return id_; }
  const std::vector<PointIndex>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(PointIndex p) const;

 private:
  std::string id_;
  std::vector<PointIndex> members_;  // sorted ascending, deduplicated
};

class GroupFamily {
 public:
  GroupFamily() = default;
  explicit GroupFamily(std::vector<Group> groups);

  std::size_t size() const { return groups_.size(); }
  const Group& group(std::size_t i) const { return groups_[i]; }
  const std::vector<Group>& groups() const { return groups_; }

 private:
  std::vector<Group> groups_;
};

/// One hypothesis, or an implicit block of hypotheses. fixed_[p] is -1/+1
/// where the block pins a value and 0 where the point is free; a free point
/// ranges over both labels. A hypothesis with no free points is a single
/// explicit function.
///
/// Members of a block are ordered by completing free points (in domain
/// order, first point most significant) with +1 before -1, so the first
/// member consistent with a set of point constraints is the fixed part plus
/// the constrained values plus +1 everywhere else.
class Hypothesis {
 public:
  /// Explicit function: values must be total and in {-1,+1}.
  static Hypothesis explicit_fn(std::string id, std::vector<Label> values);

  /// Implicit block: pairs pin values, every other domain point is free.
  static Hypothesis block(std::string id, std::size_t domain_size,
                          const std::vector<std::pair<PointIndex, Label>>& fixed);

  const std::string& id() const { return id_; }
  bool is_explicit() const { return free_.empty(); }
  std::size_t domain_size() const { return fixed_.size(); }

  /// -1/+1 where pinned, 0 where free.
  Label fixed_value(PointIndex p) const { return fixed_[p]; }
  const std::vector<Label>& fixed_values() const { return fixed_; }
  const std::vector<PointIndex>& free_points() const { return free_; }

  /// True iff some member of the block takes the given labels, i.e. the
  /// fixed part does not contradict any (point, label) constraint.
  bool compatible(const std::vector<std::pair<PointIndex, Label>>& constraints) const;

  /// Number of functions the block denotes (2^free), saturating at 2^63.
  std::uint64_t denoted_count() const;

 private:
  Hypothesis() = default;
  std::string id_;
  std::vector<Label> fixed_;
  std::vector<PointIndex> free_;  // ascending indices with fixed_ == 0
};

/// Ordered list of hypotheses and blocks with unique ids. The list may be
/// empty (an empty formula's reduction has no hypotheses); individual blocks
/// always denote at least one function.
class HypothesisClass {
 public:
  HypothesisClass() = default;
  explicit HypothesisClass(std::vector<Hypothesis> members);

  std::size_t size() const { return members_.size(); }
  const Hypothesis& member(std::size_t i) const { return members_[i]; }
  const std::vector<Hypothesis>& members() const { return members_; }

 private:
  std::vector<Hypothesis> members_;
};

/// Ordered (point, label) examples; repeats allowed.
struct LabeledSample {
  std::vector<std::pair<PointIndex, Label>> examples;

  std::size_t size() const { return examples.size(); }
};

/// Per-point labels collapsed from a sample: 0 = unsampled. conflicting is
/// set when some point appears with both labels (labels then keep the first
/// occurrence).
struct CollapsedSample {
  std::vector<Label> labels;
  bool conflicting = false;
};

CollapsedSample collapse(const LabeledSample& s, std::size_t domain_size);

/// The universe every algorithm runs on. The target is either a
/// deterministic concept c* or, for non-realizable fixtures, a per-point
/// probability of the label +1. Exactly one of the two is present.
class FiniteInstance {
 public:
  FiniteInstance(FiniteDomain domain, GroupFamily groups, HypothesisClass hypotheses,
                 std::vector<double> mass, std::vector<Label> target);
  FiniteInstance(FiniteDomain domain, GroupFamily groups, HypothesisClass hypotheses,
                 std::vector<double> mass, std::vector<double> label_prob);

  const FiniteDomain& domain() const { return domain_; }
  const GroupFamily& groups() const { return groups_; }
  const HypothesisClass& hypotheses() const { return hypotheses_; }
  const std::vector<double>& mass() const { return mass_; }

  bool deterministic_target() const { return target_.has_value(); }
  const std::vector<Label>& target() const;
  const std::vector<double>& label_prob() const;

 private:
  void validate_mass() const;
  FiniteDomain domain_;
  GroupFamily groups_;
  HypothesisClass hypotheses_;
  std::vector<double> mass_;
  std::optional<std::vector<Label>> target_;
  std::optional<std::vector<double>> label_prob_;
};

/// Distinct restrictions H|_g as label vectors over g's members in domain
/// order, sorted lexicographically with -1 before +1. Throws on an empty
/// group; blocks contribute all completions of their free points inside g,
/// subject to limits.max_enumeration.
std::vector<std::vector<Label>> restrict_class(const HypothesisClass& h, const Group& g,
                                               const Limits& limits = Limits{});

double group_mass(const FiniteInstance& inst, const Group& g);

/// True iff labels are deterministic on the support and, for every
/// positive-mass group, the induced target agrees with some hypothesis on
/// that group (fixed parts must match; free points absorb anything). For
/// probabilistic fixtures only support points constrain the hypotheses.
bool is_group_realizable(const FiniteInstance& inst);

}  // namespace mglab

#endif  // MGLAB_INSTANCE_HPP
