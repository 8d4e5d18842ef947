#ifndef MGLAB_GENERATORS_HPP
#define MGLAB_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "mglab/instance.hpp"

namespace mglab {

/// Parsed form of a generator string "kind" or "kind:key=value,key=value".
///
/// threshold-line: points (default 64), groups (default 4), hyps (default
///   points-1, the full set of interior thresholds), gamma (default 0.15,
///   minimum group mass the mass profile must respect), mass ("ladder"
///   default, or "uniform"), seed (default 0). Points sit on a line; the
///   hypotheses are the step functions +1 at and beyond a cut; groups are
///   overlapping intervals; the target is one of the hypotheses. The ladder
///   profile thins the points just below the target cut geometrically so the
///   hard-to-pin region keeps shrinking mass as samples grow.
/// prop1-singletons: points (default 12). Singleton groups, the two constant
///   hypotheses, uniform mass, alternating target.
/// agnostic-counterexample: no keys. Three equal-mass regions with label
///   probabilities 1/2, 2/3, 0 over two overlapping groups and the two
///   constant hypotheses.
/// reduction-derived: vars (default 6), clauses (default 4), seed (default
///   0). A random exactly-one-satisfiable formula's reduction with uniform
///   mass and the induced concept as target.
struct GeneratorSpec {
  std::string kind;
  std::uint64_t points = 0;
  std::uint64_t groups = 0;
  std::uint64_t hyps = 0;
  double gamma = 0.15;
  std::string mass_profile = "ladder";
  std::uint64_t vars = 6;
  std::uint64_t clauses = 4;
  std::uint64_t seed = 0;
};

GeneratorSpec parse_generator_spec(std::string_view text);

FiniteInstance generate(const GeneratorSpec& spec);

}  // namespace mglab

#endif  // MGLAB_GENERATORS_HPP
