#include "mglab/generators.hpp"

#include <algorithm>
#include <cmath>

#include "mglab/errors.hpp"
#include "mglab/reduction.hpp"
#include "mglab/rng.hpp"
#include "mglab/text.hpp"

namespace mglab {

namespace {

constexpr std::uint64_t kLadderRungs = 7;  // halving steps below the target cut

FiniteInstance generate_threshold_line(const GeneratorSpec& spec) {
  const std::uint64_t m = spec.points == 0 ? 64 : spec.points;
  const std::uint64_t k = spec.groups == 0 ? 4 : spec.groups;
  const std::uint64_t q = spec.hyps == 0 ? m - 1 : spec.hyps;
  if (m < 4) throw ValidationError("threshold-line needs at least 4 points");
  if (k < 1) throw ValidationError("threshold-line needs at least 1 group");
  if (q < 1 || q > m - 1) {
    throw ValidationError("threshold-line hypothesis count must lie in [1, points-1]");
  }
  if (!(spec.gamma >= 0.0 && spec.gamma < 1.0)) {
    throw ValidationError("gamma must lie in [0,1)");
  }

  std::vector<std::string> names;
  names.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  FiniteDomain domain(std::move(names));

  std::vector<Group> groups;
  groups.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t lo = i * m / (k + 1);
    const std::uint64_t hi = (i + 2) * m / (k + 1);
    if (hi <= lo) {
      throw ValidationError("threshold-line group " + std::to_string(i) + " would be empty");
    }
    std::vector<PointIndex> members;
    members.reserve(hi - lo);
    for (std::uint64_t p = lo; p < hi; ++p) members.push_back(static_cast<PointIndex>(p));
    groups.emplace_back("g" + std::to_string(i), std::move(members), domain);
  }
  GroupFamily family(std::move(groups));

  std::vector<std::uint64_t> cuts;
  cuts.reserve(q);
  for (std::uint64_t j = 0; j < q; ++j) cuts.push_back((j + 1) * m / (q + 1));
  std::vector<Hypothesis> hyps;
  hyps.reserve(q);
  for (std::uint64_t cut : cuts) {
    std::vector<Label> values(m);
    for (std::uint64_t p = 0; p < m; ++p) values[p] = p >= cut ? Label{1} : Label{-1};
    hyps.push_back(Hypothesis::explicit_fn("h" + std::to_string(cut), std::move(values)));
  }

  // The target cut stays in the middle half so its neighborhood is interior.
  std::vector<std::uint64_t> eligible;
  for (std::uint64_t cut : cuts) {
    if (4 * cut >= m && 4 * cut <= 3 * m) eligible.push_back(cut);
  }
  if (eligible.empty()) eligible = cuts;
  Rng rng(spec.seed);
  const std::uint64_t target_cut = eligible[rng.next_below(eligible.size())];
  std::vector<Label> target(m);
  for (std::uint64_t p = 0; p < m; ++p) target[p] = p >= target_cut ? Label{1} : Label{-1};

  std::vector<double> mass(m, 1.0);
  if (spec.mass_profile == "ladder") {
    // Halve the weight rung by rung approaching the cut from below. A lowest
    // consistent cut then mislabels a gap whose mass shrinks like 1/n.
    const std::uint64_t rungs = std::min(kLadderRungs, target_cut - 1);
    for (std::uint64_t j = 1; j <= rungs; ++j) {
      mass[target_cut - j] = std::ldexp(1.0, -static_cast<int>(rungs + 1 - j));
    }
  } else if (spec.mass_profile != "uniform") {
    throw ValidationError("unknown mass profile '" + spec.mass_profile + "'");
  }
  double sum = 0.0;
  for (double v : mass) sum += v;
  for (double& v : mass) v /= sum;
  for (const auto& g : family.groups()) {
    double gm = 0.0;
    for (PointIndex p : g.members()) gm += mass[p];
    if (gm < spec.gamma) {
      throw ValidationError("threshold-line groups are too light for the requested gamma");
    }
  }

  return FiniteInstance(std::move(domain), std::move(family),
                        HypothesisClass(std::move(hyps)), std::move(mass), std::move(target));
}

FiniteInstance generate_prop1(const GeneratorSpec& spec) {
  const std::uint64_t m = spec.points == 0 ? 12 : spec.points;
  if (m < 1) throw ValidationError("prop1-singletons needs at least 1 point");
  std::vector<std::string> names;
  names.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  FiniteDomain domain(std::move(names));

  std::vector<Group> groups;
  groups.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    groups.emplace_back("g" + std::to_string(i),
                        std::vector<PointIndex>{static_cast<PointIndex>(i)}, domain);
  }

  std::vector<Hypothesis> hyps;
  hyps.push_back(Hypothesis::explicit_fn("const+", std::vector<Label>(m, 1)));
  hyps.push_back(Hypothesis::explicit_fn("const-", std::vector<Label>(m, -1)));

  std::vector<double> mass(m, 1.0 / static_cast<double>(m));
  std::vector<Label> target(m);
  for (std::uint64_t i = 0; i < m; ++i) target[i] = (i % 2 == 0) ? Label{1} : Label{-1};

  return FiniteInstance(std::move(domain), GroupFamily(std::move(groups)),
                        HypothesisClass(std::move(hyps)), std::move(mass), std::move(target));
}

FiniteInstance generate_agnostic(const GeneratorSpec&) {
  FiniteDomain domain(std::vector<std::string>{"a", "b", "c"});
  std::vector<Group> groups;
  groups.emplace_back("g1", std::vector<PointIndex>{0, 1}, domain);
  groups.emplace_back("g2", std::vector<PointIndex>{1, 2}, domain);
  std::vector<Hypothesis> hyps;
  hyps.push_back(Hypothesis::explicit_fn("const+", std::vector<Label>{1, 1, 1}));
  hyps.push_back(Hypothesis::explicit_fn("const-", std::vector<Label>{-1, -1, -1}));
  const double third = 1.0 / 3.0;
  std::vector<double> mass{third, third, third};
  std::vector<double> label_prob{0.5, 2.0 / 3.0, 0.0};
  return FiniteInstance(std::move(domain), GroupFamily(std::move(groups)),
                        HypothesisClass(std::move(hyps)), std::move(mass),
                        std::move(label_prob));
}

FiniteInstance generate_reduction_derived(const GeneratorSpec& spec) {
  if (spec.vars < 3 || spec.vars > 20) {
    throw ValidationError("reduction-derived needs between 3 and 20 variables");
  }
  if (spec.clauses < 1) {
    throw ValidationError("reduction-derived needs at least 1 clause");
  }
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(derive_seed(spec.seed, attempt));
    CnfFormula phi = random_formula(static_cast<std::uint32_t>(spec.vars),
                                    static_cast<std::uint32_t>(spec.clauses), rng);
    auto assignment = exactly_one_sat_bruteforce(phi);
    if (!assignment) continue;
    ReductionInstance red = build_reduction(phi);
    Concept target = induced_concept(red, *assignment);
    const std::size_t n = red.domain.size();
    std::vector<double> mass(n, 1.0 / static_cast<double>(n));
    return FiniteInstance(std::move(red.domain), std::move(red.groups),
                          std::move(red.hypotheses), std::move(mass), std::move(target));
  }
  throw ValidationError("no exactly-one-satisfiable formula found for these parameters");
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.kind = std::string(trim(colon == std::string_view::npos ? text : text.substr(0, colon)));
  if (spec.kind != "threshold-line" && spec.kind != "prop1-singletons" &&
      spec.kind != "agnostic-counterexample" && spec.kind != "reduction-derived") {
    throw ValidationError("unknown generator kind '" + spec.kind + "'");
  }
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("generator option '" + std::string(item) +
                            "' must look like key=value");
    }
    std::string_view key = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    if (key == "points") {
      spec.points = parse_u64(value, "points");
    } else if (key == "groups") {
      spec.groups = parse_u64(value, "groups");
    } else if (key == "hyps") {
      spec.hyps = parse_u64(value, "hyps");
    } else if (key == "gamma") {
      spec.gamma = parse_double(value, "gamma");
    } else if (key == "mass") {
      spec.mass_profile = std::string(value);
    } else if (key == "vars") {
      spec.vars = parse_u64(value, "vars");
    } else if (key == "clauses") {
      spec.clauses = parse_u64(value, "clauses");
    } else if (key == "seed") {
      spec.seed = parse_u64(value, "seed");
    } else {
      throw ValidationError("unknown generator option '" + std::string(key) + "'");
    }
  }
  return spec;
}

FiniteInstance generate(const GeneratorSpec& spec) {
  if (spec.kind == "threshold-line") return generate_threshold_line(spec);
  if (spec.kind == "prop1-singletons") return generate_prop1(spec);
  if (spec.kind == "agnostic-counterexample") return generate_agnostic(spec);
  if (spec.kind == "reduction-derived") return generate_reduction_derived(spec);
  throw ValidationError("unknown generator kind '" + spec.kind + "'");
}

}  // namespace mglab
