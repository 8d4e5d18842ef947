#ifndef MGLAB_TEST_UTIL_HPP
#define MGLAB_TEST_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mglab/concepts.hpp"
#include "mglab/instance.hpp"
#include "mglab/rng.hpp"

namespace mglab::testutil {

inline FiniteDomain make_domain(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return FiniteDomain(std::move(names));
}

/// "+-+" -> (+1,-1,+1).
inline std::vector<Label> labels_of(std::string_view signs) {
  std::vector<Label> out;
  out.reserve(signs.size());
  for (char c : signs) out.push_back(c == '+' ? Label{1} : Label{-1});
  return out;
}

inline Hypothesis hyp_row(std::string id, std::string_view signs) {
  return Hypothesis::explicit_fn(std::move(id), labels_of(signs));
}

/// All 2^n labelings in lexicographic order, -1 before +1, first point most
/// significant. Independent of the library's enumeration code.
inline std::vector<Concept> all_labelings(std::size_t n) {
  std::vector<Concept> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    Concept f(n);
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = ((code >> (n - 1 - j)) & 1) ? Label{1} : Label{-1};
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Every explicit function a hypothesis (or block) denotes, by brute
/// expansion of its free points.
inline std::vector<Concept> expand_hypothesis(const Hypothesis& h) {
  const auto& free_pts = h.free_points();
  std::vector<Concept> out;
  out.reserve(std::size_t{1} << free_pts.size());
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_pts.size()); ++code) {
    Concept f(h.fixed_values().begin(), h.fixed_values().end());
    for (std::size_t j = 0; j < free_pts.size(); ++j) {
      f[free_pts[j]] = ((code >> j) & 1) ? Label{1} : Label{-1};
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Definitional membership test: for every group some denoted function
/// agrees with f on the whole group. Expands blocks explicitly, so it shares
/// no logic with the library's fixed-part shortcut.
inline bool oracle_contains(const GroupFamily& groups, const HypothesisClass& hypotheses,
                            const Concept& f) {
  for (const auto& g : groups.groups()) {
    if (g.empty()) continue;
    bool matched = false;
    for (const auto& h : hypotheses.members()) {
      for (const auto& cand : expand_hypothesis(h)) {
        bool agrees = true;
        for (PointIndex p : g.members()) {
          if (cand[p] != f[p]) {
            agrees = false;
            break;
          }
        }
        if (agrees) {
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
    if (!matched) return false;
  }
  return true;
}

inline std::vector<Concept> oracle_enumerate(const GroupFamily& groups,
                                             const HypothesisClass& hypotheses,
                                             std::size_t domain_size) {
  std::vector<Concept> out;
  for (const auto& f : all_labelings(domain_size)) {
    if (oracle_contains(groups, hypotheses, f)) out.push_back(f);
  }
  return out;
}

inline bool consistent_with(const Concept& f, const LabeledSample& s) {
  for (const auto& [p, y] : s.examples) {
    if (f[p] != y) return false;
  }
  return true;
}

struct RandomInstance {
  FiniteDomain domain;
  GroupFamily groups;
  HypothesisClass hypotheses;
};

/// Small random (domain, groups, hypotheses) triple. Groups are random
/// subsets; hypotheses mix explicit rows and implicit blocks.
inline RandomInstance random_instance(Rng& rng, std::size_t max_points, std::size_t max_groups,
                                      std::size_t max_hyps) {
  const std::size_t n = 1 + rng.next_below(max_points);
  FiniteDomain domain = make_domain(n);

  const std::size_t num_groups = rng.next_below(max_groups + 1);
  std::vector<Group> groups;
  for (std::size_t i = 0; i < num_groups; ++i) {
    std::vector<PointIndex> members;
    for (std::size_t p = 0; p < n; ++p) {
      if (rng.next_below(3) != 0) members.push_back(static_cast<PointIndex>(p));
    }
    groups.emplace_back("g" + std::to_string(i), std::move(members), domain);
  }

  const std::size_t num_hyps = 1 + rng.next_below(max_hyps);
  std::vector<Hypothesis> hyps;
  for (std::size_t i = 0; i < num_hyps; ++i) {
    if (rng.next_below(2) == 0) {
      std::vector<Label> values(n);
      for (auto& v : values) v = rng.next_bool() ? Label{1} : Label{-1};
      hyps.push_back(Hypothesis::explicit_fn("h" + std::to_string(i), std::move(values)));
    } else {
      std::vector<std::pair<PointIndex, Label>> fixed;
      for (std::size_t p = 0; p < n; ++p) {
        const std::uint64_t roll = rng.next_below(3);
        if (roll == 0) continue;  // free
        fixed.emplace_back(static_cast<PointIndex>(p), roll == 1 ? Label{1} : Label{-1});
      }
      hyps.push_back(Hypothesis::block("h" + std::to_string(i), n, fixed));
    }
  }

  return RandomInstance{std::move(domain), GroupFamily(std::move(groups)),
                        HypothesisClass(std::move(hyps))};
}

inline LabeledSample random_sample(Rng& rng, std::size_t domain_size, std::size_t count) {
  LabeledSample s;
  for (std::size_t i = 0; i < count; ++i) {
    s.examples.emplace_back(static_cast<PointIndex>(rng.next_below(domain_size)),
                            rng.next_bool() ? Label{1} : Label{-1});
  }
  return s;
}

}  // namespace mglab::testutil

#endif  // MGLAB_TEST_UTIL_HPP
