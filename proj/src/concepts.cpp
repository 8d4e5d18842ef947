#include "mglab/concepts.hpp"

#include <algorithm>
#include <unordered_map>

#include "mglab/errors.hpp"

namespace mglab {

namespace {

// Hypotheses compatible with the collapsed sample labels inside g.
std::vector<std::uint32_t> unary_candidates(const Group& g, const HypothesisClass& hyps,
                                            const std::vector<Label>& labels) {
  std::vector<std::pair<PointIndex, Label>> constraints;
  for (PointIndex p : g.members()) {
    if (labels[p] != 0) constraints.emplace_back(p, labels[p]);
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = 0; h < hyps.size(); ++h) {
    if (hyps.member(h).compatible(constraints)) out.push_back(h);
  }
  return out;
}

// Two blocks admit a common concept on the given points iff their fixed
// parts never disagree there.
bool blocks_compatible(const Hypothesis& a, const Hypothesis& b,
                       const std::vector<PointIndex>& points) {
  for (PointIndex p : points) {
    Label va = a.fixed_value(p);
    Label vb = b.fixed_value(p);
    if (va != 0 && vb != 0 && va != vb) return false;
  }
  return true;
}

struct Csp {
  const HypothesisClass& hyps;
  std::vector<std::uint32_t> group_of_var;                  // var -> group index
  std::vector<std::vector<std::uint32_t>> candidates;       // var -> hypothesis indices
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<PointIndex>>>> neighbors;
  std::vector<std::uint32_t> static_rank;                   // var -> position in static order

  bool revise(std::size_t v, std::size_t w, const std::vector<PointIndex>& inter) {
    auto& cand = candidates[v];
    const auto& other = candidates[w];
    std::size_t kept = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Hypothesis& a = hyps.member(cand[i]);
      bool supported = false;
      for (std::uint32_t bo : other) {
        if (blocks_compatible(a, hyps.member(bo), inter)) {
          supported = true;
          break;
        }
      }
      if (supported) cand[kept++] = cand[i];
    }
    bool changed = kept != cand.size();
    cand.resize(kept);
    return changed;
  }

  bool ac3() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
    for (std::uint32_t v = 0; v < candidates.size(); ++v) {
      for (const auto& [w, inter] : neighbors[v]) queue.emplace_back(v, w);
    }
    while (!queue.empty()) {
      auto [v, w] = queue.back();
      queue.pop_back();
      const std::vector<PointIndex>* inter = nullptr;
      for (const auto& [nv, npts] : neighbors[v]) {
        if (nv == w) {
          inter = &npts;
          break;
        }
      }
      if (revise(v, w, *inter)) {
        if (candidates[v].empty()) return false;
        for (const auto& [u, _] : neighbors[v]) {
          if (u != w) queue.emplace_back(u, v);
        }
      }
    }
    return true;
  }

  // Backtracking with forward checking. Among unassigned variables the one
  // with the fewest remaining candidates goes first, ties broken by the
  // static descending-intersection-degree order.
  bool search(std::vector<std::int64_t>& chosen) {
    std::size_t best = candidates.size();
    for (std::size_t v = 0; v < candidates.size(); ++v) {
      if (chosen[v] >= 0) continue;
      if (best == candidates.size() ||
          candidates[v].size() < candidates[best].size() ||
          (candidates[v].size() == candidates[best].size() &&
           static_rank[v] < static_rank[best])) {
        best = v;
      }
    }
    if (best == candidates.size()) return true;

    const std::vector<std::uint32_t> options = candidates[best];
    for (std::uint32_t h : options) {
      chosen[best] = h;
      candidates[best] = {h};
      std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> saved;
      bool wiped = false;
      for (const auto& [w, inter] : neighbors[best]) {
        if (chosen[w] >= 0) continue;
        saved.emplace_back(w, candidates[w]);
        revise(w, best, inter);
        if (candidates[w].empty()) {
          wiped = true;
          break;
        }
      }
      if (!wiped && search(chosen)) return true;
      for (auto& [w, dom] : saved) candidates[w] = std::move(dom);
      chosen[best] = -1;
      candidates[best] = options;
    }
    return false;
  }
};

}  // namespace

bool contains(const GroupFamily& groups, const HypothesisClass& hypotheses, const Concept& f) {
  for (const auto& g : groups.groups()) {
    if (g.empty()) continue;
    std::vector<std::pair<PointIndex, Label>> constraints;
    constraints.reserve(g.members().size());
    for (PointIndex p : g.members()) constraints.emplace_back(p, f[p]);
    bool matched = false;
    for (const auto& h : hypotheses.members()) {
      if (h.compatible(constraints)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<Concept> enumerate_concepts(const GroupFamily& groups,
                                        const HypothesisClass& hypotheses,
                                        const FiniteDomain& domain, const Limits& limits) {
  const std::size_t n = domain.size();
  if (n >= 63 || (std::uint64_t{1} << n) > limits.max_enumeration) {
    throw CapExceededError("concept enumeration over " + std::to_string(n) +
                           " points exceeds the configured cap");
  }
  std::vector<Concept> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < total; ++code) {
    Concept f(n);
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = ((code >> (n - 1 - j)) & 1) ? Label{1} : Label{-1};
    }
    if (contains(groups, hypotheses, f)) out.push_back(std::move(f));
  }
  return out;
}

ErmResult find_consistent(const GroupFamily& groups, const HypothesisClass& hypotheses,
                          const LabeledSample& sample, const FiniteDomain& domain) {
  const std::size_t n = domain.size();
  CollapsedSample collapsed = collapse(sample, n);
  if (collapsed.conflicting) {
    return {ErmResult::Status::ConflictingSample, std::nullopt, {}};
  }
  const auto& labels = collapsed.labels;

  Csp csp{hypotheses, {}, {}, {}, {}};
  for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
    if (groups.group(gi).empty()) continue;
    csp.group_of_var.push_back(gi);
    csp.candidates.push_back(unary_candidates(groups.group(gi), hypotheses, labels));
    if (csp.candidates.back().empty()) {
      return {ErmResult::Status::Inconsistent, std::nullopt, {}};
    }
  }
  const std::size_t nvars = csp.group_of_var.size();
  csp.neighbors.resize(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    const auto& gv = groups.group(csp.group_of_var[v]).members();
    for (std::size_t w = v + 1; w < nvars; ++w) {
      const auto& gw = groups.group(csp.group_of_var[w]).members();
      std::vector<PointIndex> inter;
      std::set_intersection(gv.begin(), gv.end(), gw.begin(), gw.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) {
        csp.neighbors[v].emplace_back(static_cast<std::uint32_t>(w), inter);
        csp.neighbors[w].emplace_back(static_cast<std::uint32_t>(v), inter);
      }
    }
  }
  std::vector<std::uint32_t> order(nvars);
  for (std::uint32_t v = 0; v < nvars; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return csp.neighbors[a].size() > csp.neighbors[b].size();
  });
  csp.static_rank.resize(nvars);
  for (std::uint32_t r = 0; r < nvars; ++r) csp.static_rank[order[r]] = r;

  if (!csp.ac3()) {
    return {ErmResult::Status::Inconsistent, std::nullopt, {}};
  }
  std::vector<std::int64_t> chosen(nvars, -1);
  if (!csp.search(chosen)) {
    return {ErmResult::Status::Inconsistent, std::nullopt, {}};
  }

  Concept f(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (labels[p] != 0) {
      f[p] = labels[p];
      continue;
    }
    Label value = 0;
    for (std::size_t v = 0; v < nvars && value == 0; ++v) {
      const Group& g = groups.group(csp.group_of_var[v]);
      if (!g.contains(static_cast<PointIndex>(p))) continue;
      value = hypotheses.member(static_cast<std::uint32_t>(chosen[v]))
                  .fixed_value(static_cast<PointIndex>(p));
    }
    f[p] = value == 0 ? Label{1} : value;
  }

  ErmResult result{ErmResult::Status::Consistent, std::move(f), {}};
  for (std::size_t v = 0; v < nvars; ++v) {
    result.witness.emplace_back(groups.group(csp.group_of_var[v]).id(),
                                hypotheses.member(static_cast<std::uint32_t>(chosen[v])).id());
  }
  return result;
}

bool verify_witness(const GroupFamily& groups, const HypothesisClass& hypotheses,
                    const Concept& f, const ErmResult& result) {
  if (result.status != ErmResult::Status::Consistent) return false;
  std::unordered_map<std::string, const Hypothesis*> by_id;
  for (const auto& h : hypotheses.members()) by_id[h.id()] = &h;

  std::unordered_map<std::string, std::string> witness;
  for (const auto& [gid, hid] : result.witness) {
    if (!witness.emplace(gid, hid).second) return false;
  }
  std::size_t nonempty = 0;
  for (const auto& g : groups.groups()) {
    if (g.empty()) continue;
    ++nonempty;
    auto it = witness.find(g.id());
    if (it == witness.end()) return false;
    auto hit = by_id.find(it->second);
    if (hit == by_id.end()) return false;
    for (PointIndex p : g.members()) {
      Label v = hit->second->fixed_value(p);
      if (v != 0 && v != f[p]) return false;
    }
  }
  return nonempty == witness.size();
}

}  // namespace mglab
