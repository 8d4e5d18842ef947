#ifndef MGLAB_REDUCTION_HPP
#define MGLAB_REDUCTION_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mglab/concepts.hpp"
#include "mglab/instance.hpp"
#include "mglab/limits.hpp"
#include "mglab/rng.hpp"

namespace mglab {

/// 1-based variable index plus negation flag. The polarity of a literal is
/// +1 when positive, -1 when negated.
struct Literal {
  std::uint32_t var;
  bool negated;

  Label polarity() const { return negated ? Label{-1} : Label{1}; }
  bool operator==(const Literal&) const = default;
};

/// Exactly three literals over three distinct variables.
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;
};

/// The constructed ERM-consistency instance: n variable points and m clause
/// points, one group per clause (its three variable points plus its clause
/// point), three hypothesis blocks per clause, and the all-positive clause
/// sample.
struct ReductionInstance {
  CnfFormula formula;
  FiniteDomain domain;
  GroupFamily groups;
  HypothesisClass hypotheses;
  LabeledSample sample;
};

using TruthAssignment = std::vector<bool>;  // indexed by variable - 1

/// DIMACS parser. Requires the "p cnf <vars> <clauses>" header, exactly the
/// declared number of clauses, and width-3 clauses over distinct variables;
/// 'c' lines are comments.
CnfFormula parse_cnf(std::string_view text);

/// DIMACS form of a formula (canonical output of the generator helpers).
std::string format_cnf(const CnfFormula& phi);

ReductionInstance build_reduction(const CnfFormula& phi);

/// First assignment making exactly one literal of every clause true, with
/// assignments enumerated in counting order (x1 is the fastest-moving bit,
/// all-false first); nullopt if none exists. Capped at
/// limits.max_bruteforce_vars variables.
std::optional<TruthAssignment> exactly_one_sat_bruteforce(const CnfFormula& phi,
                                                          const Limits& limits = Limits{});

/// The concept an exactly-one-true assignment induces on the reduction
/// domain: variable points of used variables take the assignment's sign,
/// unused variable points and clause points take +1.
Concept induced_concept(const ReductionInstance& inst, const TruthAssignment& assignment);

/// Polynomial consistent-hypothesis oracle for the constructed class: the
/// sample's clause-point labels prune whole per-clause sub-classes, then the
/// surviving blocks are scanned for one whose pinned values absorb the
/// variable-point labels. Returns the first consistent member (sample labels
/// on its free points, +1 elsewhere), or nullopt.
std::optional<Hypothesis> consistent_hypothesis_search(const ReductionInstance& inst,
                                                       const LabeledSample& sample);

struct ReductionReport {
  bool sat = false;
  bool erm_consistent = false;
  bool agree = false;
};

/// Compares the brute-force exactly-one-true oracle with consistent-concept
/// search on the built instance.
ReductionReport verify_reduction(const CnfFormula& phi, const Limits& limits = Limits{});

/// All width-3 clauses over variables 1..num_vars (ascending variable
/// triples, all eight polarity patterns).
std::vector<Clause> all_clauses(std::uint32_t num_vars);

/// Every formula with num_vars variables and exactly num_clauses clauses,
/// deduplicated up to clause order (clause multisets in nondecreasing index
/// order over all_clauses).
std::vector<CnfFormula> exhaustive_formulas(std::uint32_t num_vars, std::uint32_t num_clauses);

/// Seeded random formula: clauses pick three distinct variables (ascending)
/// with independent random polarities.
CnfFormula random_formula(std::uint32_t num_vars, std::uint32_t num_clauses, Rng& rng);

}  // namespace mglab

#endif  // MGLAB_REDUCTION_HPP
