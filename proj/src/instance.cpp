#include "mglab/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "mglab/errors.hpp"

namespace mglab {

namespace {

// Index lookup is rebuilt on demand; domains are small and lookups are
// concentrated in parsing, so a linear scan keeps FiniteDomain trivially
// copyable without a side table.
}  // namespace

FiniteDomain::FiniteDomain(std::vector<std::string> points) : points_(std::move(points)) {
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (p.empty()) {
      throw ValidationError("empty point identifier");
    }
    if (!seen.insert(p).second) {
      throw ValidationError("duplicate point identifier '" + p + "'");
    }
  }
}

PointIndex FiniteDomain::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) {
    throw ValidationError("unknown point '" + name + "'");
  }
  return *idx;
}

std::optional<PointIndex> FiniteDomain::find(const std::string& name) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == name) return static_cast<PointIndex>(i);
  }
  return std::nullopt;
}

Group::Group(std::string id, std::vector<PointIndex> members, const FiniteDomain& domain)
    : id_(std::move(id)), members_(std::move(members)) {
  if (id_.empty()) {
    throw ValidationError("empty group id");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= domain.size()) {
    throw ValidationError("group '" + id_ + "' references a point outside the domain");
  }
}

bool Group::contains(PointIndex p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

GroupFamily::GroupFamily(std::vector<Group> groups) : groups_(std::move(groups)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : groups_) {
    if (!seen.insert(g.id()).second) {
      throw ValidationError("duplicate group id '" + g.id() + "'");
    }
  }
}

Hypothesis Hypothesis::explicit_fn(std::string id, std::vector<Label> values) {
  Hypothesis h;
  h.id_ = std::move(id);
  if (h.id_.empty()) {
    throw ValidationError("empty hypothesis id");
  }
  for (Label v : values) {
    if (v != -1 && v != 1) {
      throw ValidationError("hypothesis '" + h.id_ + "' has a non ±1 value");
    }
  }
  h.fixed_ = std::move(values);
  return h;
}

Hypothesis Hypothesis::block(std::string id, std::size_t domain_size,
                             const std::vector<std::pair<PointIndex, Label>>& fixed) {
  Hypothesis h;
  h.id_ = std::move(id);
  if (h.id_.empty()) {
    throw ValidationError("empty hypothesis id");
  }
  h.fixed_.assign(domain_size, 0);
  for (auto [p, v] : fixed) {
    if (p >= domain_size) {
      throw ValidationError("hypothesis '" + h.id_ + "' fixes a point outside the domain");
    }
    if (v != -1 && v != 1) {
      throw ValidationError("hypothesis '" + h.id_ + "' fixes a non ±1 value");
    }
    if (h.fixed_[p] != 0) {
      throw ValidationError("hypothesis '" + h.id_ + "' fixes a point twice");
    }
    h.fixed_[p] = v;
  }
  for (std::size_t p = 0; p < domain_size; ++p) {
    if (h.fixed_[p] == 0) h.free_.push_back(static_cast<PointIndex>(p));
  }
  return h;
}

bool Hypothesis::compatible(const std::vector<std::pair<PointIndex, Label>>& constraints) const {
  for (auto [p, v] : constraints) {
    if (fixed_[p] != 0 && fixed_[p] != v) return false;
  }
  return true;
}

std::uint64_t Hypothesis::denoted_count() const {
  if (free_.size() >= 63) return std::uint64_t{1} << 63;
  return std::uint64_t{1} << free_.size();
}

HypothesisClass::HypothesisClass(std::vector<Hypothesis> members) : members_(std::move(members)) {
  std::unordered_set<std::string> seen;
  std::size_t domain_size = members_.empty() ? 0 : members_.front().domain_size();
  for (const auto& h : members_) {
    if (!seen.insert(h.id()).second) {
      throw ValidationError("duplicate hypothesis id '" + h.id() + "'");
    }
    if (h.domain_size() != domain_size) {
      throw ValidationError("hypothesis '" + h.id() + "' disagrees on domain size");
    }
  }
}

CollapsedSample collapse(const LabeledSample& s, std::size_t domain_size) {
  CollapsedSample out;
  out.labels.assign(domain_size, 0);
  for (auto [p, v] : s.examples) {
    if (p >= domain_size) {
      throw ValidationError("sample references a point outside the domain");
    }
    if (v != -1 && v != 1) {
      throw ValidationError("sample label must be ±1");
    }
    if (out.labels[p] == 0) {
      out.labels[p] = v;
    } else if (out.labels[p] != v) {
      out.conflicting = true;
    }
  }
  return out;
}

FiniteInstance::FiniteInstance(FiniteDomain domain, GroupFamily groups,
                               HypothesisClass hypotheses, std::vector<double> mass,
                               std::vector<Label> target)
    : domain_(std::move(domain)),
      groups_(std::move(groups)),
      hypotheses_(std::move(hypotheses)),
      mass_(std::move(mass)),
      target_(std::move(target)) {
  validate_mass();
  if (target_->size() != domain_.size()) {
    throw ValidationError("target must be total over the domain");
  }
  for (Label v : *target_) {
    if (v != -1 && v != 1) {
      throw ValidationError("target values must be ±1");
    }
  }
}

FiniteInstance::FiniteInstance(FiniteDomain domain, GroupFamily groups,
                               HypothesisClass hypotheses, std::vector<double> mass,
                               std::vector<double> label_prob)
    : domain_(std::move(domain)),
      groups_(std::move(groups)),
      hypotheses_(std::move(hypotheses)),
      mass_(std::move(mass)),
      label_prob_(std::move(label_prob)) {
  validate_mass();
  if (label_prob_->size() != domain_.size()) {
    throw ValidationError("label probability table must be total over the domain");
  }
  for (double p : *label_prob_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("label probabilities must lie in [0,1]");
    }
  }
}

void FiniteInstance::validate_mass() const {
  if (mass_.size() != domain_.size()) {
    throw ValidationError("mass table must cover the whole domain");
  }
  double sum = 0.0;
  for (double m : mass_) {
    if (!(m >= 0.0)) {
      throw ValidationError("mass entries must be nonnegative");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("mass must sum to 1");
  }
}

const std::vector<Label>& FiniteInstance::target() const {
  if (!target_) {
    throw NonRealizableFixtureError(
        "instance carries label probabilities, not a deterministic target");
  }
  return *target_;
}

const std::vector<double>& FiniteInstance::label_prob() const {
  if (!label_prob_) {
    throw ValidationError("instance has a deterministic target, not label probabilities");
  }
  return *label_prob_;
}

std::vector<std::vector<Label>> restrict_class(const HypothesisClass& h, const Group& g,
                                               const Limits& limits) {
  if (g.empty()) {
    throw ValidationError("empty restriction: group '" + g.id() + "' has no members");
  }
  const auto& pts = g.members();
  std::set<std::vector<Label>> patterns;
  std::uint64_t generated = 0;
  for (const auto& hyp : h.members()) {
    std::vector<std::size_t> free_slots;  // positions within pts that hyp leaves free
    std::vector<Label> base(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      base[i] = hyp.fixed_value(pts[i]);
      if (base[i] == 0) free_slots.push_back(i);
    }
    if (free_slots.size() >= 63) {
      throw CapExceededError("restriction of block '" + hyp.id() + "' is too large to enumerate");
    }
    const std::uint64_t count = std::uint64_t{1} << free_slots.size();
    generated += count;
    if (generated > limits.max_enumeration) {
      throw CapExceededError("restriction enumeration exceeds the configured cap");
    }
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<Label> pat = base;
      for (std::size_t j = 0; j < free_slots.size(); ++j) {
        pat[free_slots[j]] = ((m >> j) & 1) ? Label{1} : Label{-1};
      }
      patterns.insert(std::move(pat));
    }
  }
  return {patterns.begin(), patterns.end()};
}

double group_mass(const FiniteInstance& inst, const Group& g) {
  double sum = 0.0;
  for (PointIndex p : g.members()) sum += inst.mass()[p];
  return sum;
}

bool is_group_realizable(const FiniteInstance& inst) {
  const std::size_t n = inst.domain().size();
  // Induced target: 0 marks points without a forced label (off-support
  // points of a probabilistic fixture).
  std::vector<Label> induced(n, 0);
  if (inst.deterministic_target()) {
    induced = inst.target();
  } else {
    const auto& prob = inst.label_prob();
    for (std::size_t p = 0; p < n; ++p) {
      if (inst.mass()[p] <= 0.0) continue;
      if (prob[p] == 1.0) {
        induced[p] = 1;
      } else if (prob[p] == 0.0) {
        induced[p] = -1;
      } else {
        return false;  // genuinely random label on the support
      }
    }
  }
  for (const auto& g : inst.groups().groups()) {
    if (group_mass(inst, g) <= 0.0) continue;
    std::vector<std::pair<PointIndex, Label>> constraints;
    for (PointIndex p : g.members()) {
      if (induced[p] != 0) constraints.emplace_back(p, induced[p]);
    }
    bool matched = false;
    for (const auto& hyp : inst.hypotheses().members()) {
      if (hyp.compatible(constraints)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace mglab
