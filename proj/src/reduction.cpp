#include "mglab/reduction.hpp"

#include <algorithm>
#include <cstdlib>

#include "mglab/errors.hpp"
#include "mglab/text.hpp"

namespace mglab {

namespace {

bool clause_exactly_one(const Clause& clause, std::uint64_t mask) {
  int true_count = 0;
  for (const Literal& l : clause) {
    const bool var_true = (mask >> (l.var - 1)) & 1;
    if (var_true != l.negated) ++true_count;
  }
  return true_count == 1;
}

}  // namespace

CnfFormula parse_cnf(std::string_view text) {
  CnfFormula phi;
  bool have_header = false;
  std::uint32_t declared_clauses = 0;
  std::vector<std::int64_t> pending;  // literals of the clause being read

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    const std::string where = "line " + std::to_string(line_no);

    auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      if (have_header) {
        throw ValidationError(where + ": duplicate DIMACS header");
      }
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ValidationError(where + ": expected 'p cnf <vars> <clauses>'");
      }
      const std::uint64_t nv = parse_u64(tokens[2], "variable count");
      const std::uint64_t nc = parse_u64(tokens[3], "clause count");
      if (nv > 1'000'000 || nc > 1'000'000) {
        throw ValidationError(where + ": formula size out of supported range");
      }
      phi.num_vars = static_cast<std::uint32_t>(nv);
      declared_clauses = static_cast<std::uint32_t>(nc);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ValidationError(where + ": clause data before the DIMACS header");
    }
    for (auto t : tokens) {
      std::int64_t lit = parse_i64(t, "literal");
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ValidationError(where + ": clause must have exactly 3 literals, got " +
                                std::to_string(pending.size()));
        }
        Clause clause;
        for (std::size_t i = 0; i < 3; ++i) {
          const std::uint64_t v = static_cast<std::uint64_t>(std::abs(pending[i]));
          if (v < 1 || v > phi.num_vars) {
            throw ValidationError(where + ": variable " + std::to_string(v) + " out of range");
          }
          clause[i] = Literal{static_cast<std::uint32_t>(v), pending[i] < 0};
        }
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
            clause[1].var == clause[2].var) {
          throw ValidationError(where + ": repeated variable in a clause");
        }
        phi.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) {
    throw ValidationError("missing DIMACS header 'p cnf <vars> <clauses>'");
  }
  if (!pending.empty()) {
    throw ValidationError("unterminated clause at end of input");
  }
  if (phi.clauses.size() != declared_clauses) {
    throw ValidationError("header declares " + std::to_string(declared_clauses) +
                          " clauses but " + std::to_string(phi.clauses.size()) + " were given");
  }
  return phi;
}

std::string format_cnf(const CnfFormula& phi) {
  std::string out = "p cnf " + std::to_string(phi.num_vars) + ' ' +
                    std::to_string(phi.clauses.size()) + '\n';
  for (const Clause& clause : phi.clauses) {
    for (const Literal& l : clause) {
      if (l.negated) out += '-';
      out += std::to_string(l.var);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

ReductionInstance build_reduction(const CnfFormula& phi) {
  const std::uint32_t n = phi.num_vars;
  const std::uint32_t m = static_cast<std::uint32_t>(phi.clauses.size());

  std::vector<std::string> points;
  points.reserve(n + m);
  for (std::uint32_t v = 1; v <= n; ++v) points.push_back("x" + std::to_string(v));
  for (std::uint32_t i = 1; i <= m; ++i) points.push_back("C" + std::to_string(i));
  FiniteDomain domain(std::move(points));

  auto var_point = [](std::uint32_t v) { return static_cast<PointIndex>(v - 1); };
  auto clause_point = [n](std::uint32_t i) { return static_cast<PointIndex>(n + i - 1); };

  std::vector<Group> groups;
  groups.reserve(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    const Clause& clause = phi.clauses[i - 1];
    std::vector<PointIndex> members{var_point(clause[0].var), var_point(clause[1].var),
                                    var_point(clause[2].var), clause_point(i)};
    groups.emplace_back("g" + std::to_string(i), std::move(members), domain);
  }

  std::vector<Hypothesis> blocks;
  blocks.reserve(3 * m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    const Clause& clause = phi.clauses[i - 1];
    for (std::size_t t = 0; t < 3; ++t) {
      std::vector<std::pair<PointIndex, Label>> fixed;
      fixed.reserve(3 + m);
      for (std::size_t s = 0; s < 3; ++s) {
        const Label y = clause[s].polarity();
        fixed.emplace_back(var_point(clause[s].var),
                           s == t ? y : static_cast<Label>(-y));
      }
      for (std::uint32_t j = 1; j <= m; ++j) {
        fixed.emplace_back(clause_point(j), j == i ? Label{1} : Label{-1});
      }
      blocks.push_back(Hypothesis::block(
          "H" + std::to_string(i) + "^" + std::to_string(t + 1), domain.size(), fixed));
    }
  }

  LabeledSample sample;
  sample.examples.reserve(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    sample.examples.emplace_back(clause_point(i), Label{1});
  }

  return ReductionInstance{phi, std::move(domain), GroupFamily(std::move(groups)),
                           HypothesisClass(std::move(blocks)), std::move(sample)};
}

std::optional<TruthAssignment> exactly_one_sat_bruteforce(const CnfFormula& phi,
                                                          const Limits& limits) {
  if (phi.num_vars > limits.max_bruteforce_vars) {
    throw CapExceededError("brute force over " + std::to_string(phi.num_vars) +
                           " variables exceeds the configured cap");
  }
  const std::uint64_t total = std::uint64_t{1} << phi.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const Clause& clause : phi.clauses) {
      if (!clause_exactly_one(clause, mask)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      TruthAssignment a(phi.num_vars);
      for (std::uint32_t v = 0; v < phi.num_vars; ++v) a[v] = (mask >> v) & 1;
      return a;
    }
  }
  return std::nullopt;
}

Concept induced_concept(const ReductionInstance& inst, const TruthAssignment& assignment) {
  const std::uint32_t n = inst.formula.num_vars;
  if (assignment.size() != n) {
    throw ValidationError("assignment does not cover all variables");
  }
  std::vector<bool> used(n, false);
  for (const Clause& clause : inst.formula.clauses) {
    for (const Literal& l : clause) used[l.var - 1] = true;
  }
  Concept f(inst.domain.size(), 1);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (used[v]) f[v] = assignment[v] ? 1 : -1;
  }
  return f;
}

std::optional<Hypothesis> consistent_hypothesis_search(const ReductionInstance& inst,
                                                       const LabeledSample& sample) {
  CollapsedSample collapsed = collapse(sample, inst.domain.size());
  if (collapsed.conflicting) return std::nullopt;
  const auto& labels = collapsed.labels;
  const std::uint32_t n = inst.formula.num_vars;
  const std::uint32_t m = static_cast<std::uint32_t>(inst.formula.clauses.size());

  // Clause-point labels prune whole sub-classes: a positive C_i keeps only
  // clause i's blocks, a negative C_i drops them.
  std::vector<bool> allowed(m, true);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Label li = labels[n + i];
    if (li == 1) {
      for (std::uint32_t j = 0; j < m; ++j) {
        if (j != i) allowed[j] = false;
      }
    } else if (li == -1) {
      allowed[i] = false;
    }
  }

  std::vector<std::pair<PointIndex, Label>> constraints;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p] != 0) constraints.emplace_back(static_cast<PointIndex>(p), labels[p]);
  }

  for (std::uint32_t j = 0; j < m; ++j) {
    if (!allowed[j]) continue;
    for (std::size_t t = 0; t < 3; ++t) {
      const Hypothesis& block = inst.hypotheses.member(3 * j + t);
      if (!block.compatible(constraints)) continue;
      std::vector<Label> values = block.fixed_values();
      for (std::size_t p = 0; p < values.size(); ++p) {
        if (values[p] == 0) values[p] = labels[p] != 0 ? labels[p] : Label{1};
      }
      return Hypothesis::explicit_fn(block.id(), std::move(values));
    }
  }
  return std::nullopt;
}

ReductionReport verify_reduction(const CnfFormula& phi, const Limits& limits) {
  ReductionReport report;
  report.sat = exactly_one_sat_bruteforce(phi, limits).has_value();
  ReductionInstance inst = build_reduction(phi);
  ErmResult erm = find_consistent(inst.groups, inst.hypotheses, inst.sample, inst.domain);
  report.erm_consistent = erm.status == ErmResult::Status::Consistent;
  report.agree = report.sat == report.erm_consistent;
  return report;
}

std::vector<Clause> all_clauses(std::uint32_t num_vars) {
  std::vector<Clause> out;
  if (num_vars < 3) return out;
  for (std::uint32_t a = 1; a <= num_vars; ++a) {
    for (std::uint32_t b = a + 1; b <= num_vars; ++b) {
      for (std::uint32_t c = b + 1; c <= num_vars; ++c) {
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
          out.push_back(Clause{Literal{a, (mask & 1) != 0}, Literal{b, (mask & 2) != 0},
                               Literal{c, (mask & 4) != 0}});
        }
      }
    }
  }
  return out;
}

std::vector<CnfFormula> exhaustive_formulas(std::uint32_t num_vars, std::uint32_t num_clauses) {
  const std::vector<Clause> pool = all_clauses(num_vars);
  std::vector<CnfFormula> out;
  if (num_clauses == 0) {
    out.push_back(CnfFormula{num_vars, {}});
    return out;
  }
  if (pool.empty()) return out;

  // Nondecreasing index tuples enumerate clause multisets once each.
  std::vector<std::size_t> pick(num_clauses, 0);
  while (true) {
    CnfFormula phi{num_vars, {}};
    phi.clauses.reserve(num_clauses);
    for (std::size_t idx : pick) phi.clauses.push_back(pool[idx]);
    out.push_back(std::move(phi));

    std::size_t i = num_clauses;
    while (i > 0 && pick[i - 1] == pool.size() - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < num_clauses; ++j) pick[j] = pick[i - 1];
  }
  return out;
}

CnfFormula random_formula(std::uint32_t num_vars, std::uint32_t num_clauses, Rng& rng) {
  if (num_vars < 3 && num_clauses > 0) {
    throw ValidationError("clauses need at least 3 variables");
  }
  CnfFormula phi{num_vars, {}};
  phi.clauses.reserve(num_clauses);
  std::vector<std::uint32_t> vars(num_vars);
  for (std::uint32_t v = 0; v < num_vars; ++v) vars[v] = v + 1;
  for (std::uint32_t c = 0; c < num_clauses; ++c) {
    // Partial Fisher-Yates: the first three slots become the clause.
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.next_below(num_vars - i));
      std::swap(vars[i], vars[j]);
    }
    std::array<std::uint32_t, 3> chosen{vars[0], vars[1], vars[2]};
    std::sort(chosen.begin(), chosen.end());
    Clause clause;
    for (std::size_t i = 0; i < 3; ++i) {
      clause[i] = Literal{chosen[i], rng.next_bool()};
    }
    phi.clauses.push_back(clause);
  }
  return phi;
}

}  // namespace mglab
