#ifndef MGLAB_INSTANCE_IO_HPP
#define MGLAB_INSTANCE_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "mglab/instance.hpp"

namespace mglab {

/// An instance file's contents. Mass, target/label-prob, and sample sections
/// are optional so the same format serves full instances, bare (G, H)
/// structures such as emitted reductions, and fixtures.
struct ParsedInstance {
  FiniteDomain domain;
  GroupFamily groups;
  HypothesisClass hypotheses;
  std::optional<std::vector<double>> mass;
  std::optional<std::vector<Label>> target;
  std::optional<std::vector<double>> label_prob;
  std::optional<LabeledSample> sample;

  /// Requires mass and exactly one of target / label_prob.
  FiniteInstance to_instance() const;
};

ParsedInstance from_instance(const FiniteInstance& inst);

/// Line-oriented text format. Lines: "points <names...>", "group <id> :
/// <members...>", "hyp <id> : <±1 row>" or "hyp <id> : fixed <p>=±1 ...
/// free <p> ...", "mass : <p>=<value> ...", "target : <±1 row>",
/// "labelprob : <value row>", "sample : <p>=±1 ...". '#' starts a comment
/// line. The points line comes first; rows follow domain order.
/// serialize_instance emits a canonical form that parse_instance_text maps
/// back to the same structure, and canonical text is a fixed point of
/// parse-then-serialize.
ParsedInstance parse_instance_text(std::string_view text);
std::string serialize_instance(const ParsedInstance& p);

ParsedInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const ParsedInstance& p);

/// A sample file is a single "sample : ..." line plus optional comments.
LabeledSample parse_sample_text(std::string_view text, const FiniteDomain& domain);
std::string serialize_sample(const LabeledSample& s, const FiniteDomain& domain);
LabeledSample read_sample_file(const std::string& path, const FiniteDomain& domain);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace mglab

#endif  // MGLAB_INSTANCE_IO_HPP
