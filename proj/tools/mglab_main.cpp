#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mglab/bounds.hpp"
#include "mglab/combinatorics.hpp"
#include "mglab/concepts.hpp"
#include "mglab/errors.hpp"
#include "mglab/evaluation.hpp"
#include "mglab/experiments.hpp"
#include "mglab/generators.hpp"
#include "mglab/improper.hpp"
#include "mglab/instance_io.hpp"
#include "mglab/reduction.hpp"
#include "mglab/text.hpp"

namespace {

using namespace mglab;

std::string label_row(const std::vector<Label>& values) {
  std::string out;
  for (Label v : values) {
    if (!out.empty()) out += ' ';
    out += v == 1 ? "+1" : "-1";
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::vector<std::uint64_t> parse_grid(const std::string& text) {
  std::vector<std::uint64_t> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string_view item = trim(comma == std::string::npos
                                     ? std::string_view(text).substr(pos)
                                     : std::string_view(text).substr(pos, comma - pos));
    pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (!item.empty()) grid.push_back(parse_u64(item, "grid entry"));
  }
  if (grid.empty()) {
    throw ValidationError("the n grid must not be empty");
  }
  return grid;
}

void cmd_reduce(const std::string& cnf_path, const std::string& out_path) {
  CnfFormula phi = parse_cnf(read_text_file(cnf_path));
  ReductionInstance red = build_reduction(phi);
  ParsedInstance p;
  p.domain = red.domain;
  p.groups = red.groups;
  p.hypotheses = red.hypotheses;
  p.sample = red.sample;
  emit(serialize_instance(p), out_path);
}

void cmd_verify_reduction(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".cnf") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw ValidationError("no .cnf files under '" + path + "'");
    }
  } else {
    files.emplace_back(path);
  }
  std::size_t agreeing = 0;
  for (const auto& file : files) {
    CnfFormula phi = parse_cnf(read_text_file(file.string()));
    ReductionReport report = verify_reduction(phi);
    if (report.agree) ++agreeing;
    std::cout << file.filename().string() << ": sat=" << (report.sat ? "true" : "false")
              << " erm_consistent=" << (report.erm_consistent ? "true" : "false")
              << " agree=" << (report.agree ? "true" : "false") << "\n";
  }
  std::cout << "agree " << agreeing << "/" << files.size() << "\n";
}

void cmd_solve_erm(const std::string& instance_path, const std::string& sample_path) {
  ParsedInstance p = read_instance_file(instance_path);
  LabeledSample sample;
  if (!sample_path.empty()) {
    sample = read_sample_file(sample_path, p.domain);
  } else if (p.sample) {
    sample = *p.sample;
  } else {
    throw ValidationError("no sample given and the instance file embeds none");
  }
  ErmResult result = find_consistent(p.groups, p.hypotheses, sample, p.domain);
  switch (result.status) {
    case ErmResult::Status::Consistent: {
      std::cout << "status consistent\n";
      std::cout << "concept : " << label_row(*result.concept_values) << "\n";
      for (const auto& [gid, hid] : result.witness) {
        std::cout << "witness " << gid << " " << hid << "\n";
      }
      break;
    }
    case ErmResult::Status::Inconsistent:
      std::cout << "status inconsistent\n";
      break;
    case ErmResult::Status::ConflictingSample:
      std::cout << "status conflicting-sample\n";
      break;
  }
}

void cmd_vc(const std::string& instance_path, const std::string& cls,
            std::uint64_t max_points) {
  ParsedInstance p = read_instance_file(instance_path);
  Limits limits;
  limits.max_vc_points = max_points;
  BinaryClassView view = [&] {
    if (cls == "groups") return view_of_groups(p.domain, p.groups);
    if (cls == "hypotheses") return view_of_hypotheses(p.domain, p.hypotheses, limits);
    return view_of_labelings(enumerate_concepts(p.groups, p.hypotheses, p.domain, limits));
  }();
  std::cout << "class=" << cls << " patterns=" << view.num_patterns()
            << " vc_dimension=" << vc_dimension(view, limits) << "\n";
}

void cmd_bounds(const BoundParams& params) {
  const std::uint64_t s2n = [&] {
    BigInt s = sauer_bound(2 * params.n, params.dim_per_group);
    return s > std::numeric_limits<std::uint64_t>::max()
               ? std::numeric_limits<std::uint64_t>::max()
               : s.convert_to<std::uint64_t>();
  }();
  std::cout << "alpha_n = " << format_double(alpha_n(params.n, s2n, params.delta)) << "\n";
  std::cout << "foreach_bound = "
            << format_double(foreach_bound(params.n, params.dim_per_group, params.delta))
            << "\n";
  std::cout << "forall_bound = "
            << format_double(
                   forall_bound(params.n, params.dim_groups, params.dim_sup_group, params.delta))
            << "\n";
  std::cout << "sample_size_vc = " << sample_size_vc(params) << "\n";
  std::cout << "sample_size_cardinality = " << sample_size_cardinality(params) << "\n";
}

void cmd_improper(const std::string& instance_path, std::uint64_t n, double eta,
                  std::uint64_t seed) {
  FiniteInstance inst = read_instance_file(instance_path).to_instance();
  Rng rng(seed);
  LabeledSample sample = draw_sample(inst, n, rng);
  EnsembleClassifier clf = improper_learn(inst, sample, eta);
  for (const auto& e : clf.experts()) {
    std::cout << "expert " << inst.groups().group(e.group_index).id() << " hyp="
              << e.hypothesis.id() << " weight=" << format_double(e.weight) << "\n";
  }
  std::vector<Label> predictions = clf.predictions(inst.domain().size());
  for (const auto& g : inst.groups().groups()) {
    if (group_mass(inst, g) <= 0.0) continue;
    std::cout << "group " << g.id() << " error="
              << format_double(conditional_error(predictions, inst, g)) << "\n";
  }
  WorstGroupError w = worst_group_error(predictions, inst);
  std::cout << "worst_group_error = " << format_double(w.error) << "\n";
  std::cout << "worst_group = " << w.group_id << "\n";
}

void cmd_curve(const std::string& learner, const std::string& spec_text,
               const std::string& grid_text, std::uint64_t trials, std::uint64_t seed,
               const std::string& out_path) {
  GeneratorSpec spec = parse_generator_spec(spec_text);
  std::vector<std::uint64_t> grid = parse_grid(grid_text);
  LearningCurveTable table = learning_curve(learner, spec, grid, trials, seed);
  write_text_file(out_path, curve_csv(table));
  std::cout << "learner=" << table.learner << " spec=" << spec_text << " seed=" << seed
            << " min_group_mass=" << format_double(table.min_group_mass) << "\n";
  std::cout << "rows=" << table.rows.size() << " failures=" << table.failures.size() << "\n";
  for (const auto& f : table.failures) {
    std::cout << "failure n=" << f.n << " trial=" << f.trial << " " << f.message << "\n";
  }
  try {
    RateFit fit = fit_rate_exponent(table);
    std::cout << "rate_slope = " << format_double(fit.slope) << "\n";
  } catch (const ValidationError&) {
    // Too few positive medians; the CSV is still complete.
  }
}

void cmd_lemma1(const std::string& spec_text, std::uint64_t n, double delta,
                std::uint64_t trials, std::uint64_t seed) {
  GeneratorSpec spec = parse_generator_spec(spec_text);
  Lemma1Result res = lemma1_coverage(spec, n, delta, trials, seed);
  std::cout << "shatter2n = " << res.shatter2n << "\n";
  std::cout << "alpha_n = " << format_double(res.alpha) << "\n";
  std::cout << "violation_fraction = " << format_double(res.violation_fraction) << "\n";
}

void cmd_gen(const std::string& spec_text, const std::string& out_path) {
  FiniteInstance inst = generate(parse_generator_spec(spec_text));
  emit(serialize_instance(from_instance(inst)), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for multi-group learning on finite instances"};
  app.require_subcommand(1);

  std::string cnf_path, out_path, instance_path, sample_path, cls = "concepts";
  std::string learner, spec_text, grid_text;
  std::uint64_t n = 0, trials = 0, seed = 0, max_points = 20;
  double eta = 0.5, delta = 0.0;
  BoundParams params;

  auto* reduce = app.add_subcommand("reduce", "Build the consistency instance of a 3-CNF formula");
  reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce->add_option("--out", out_path, "output file (default: stdout)");
  reduce->callback([&] { cmd_reduce(cnf_path, out_path); });

  auto* verify = app.add_subcommand(
      "verify-reduction", "Check brute-force satisfiability against ERM consistency");
  verify->add_option("path", cnf_path, "a .cnf file or a directory of .cnf files")->required();
  verify->callback([&] { cmd_verify_reduction(cnf_path); });

  auto* solve = app.add_subcommand("solve-erm", "Find a class concept consistent with a sample");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("sample", sample_path,
                    "sample file (default: the instance's embedded sample)");
  solve->callback([&] { cmd_solve_erm(instance_path, sample_path); });

  auto* vc = app.add_subcommand("vc", "Exact VC dimension of an instance's classes");
  vc->add_option("instance", instance_path, "instance file")->required();
  vc->add_option("--class", cls, "groups, hypotheses, or concepts (default)")
      ->check(CLI::IsMember({"groups", "hypotheses", "concepts"}));
  vc->add_option("--max-points", max_points, "largest point count to enumerate (default 20)");
  vc->callback([&] { cmd_vc(instance_path, cls, max_points); });

  auto* bounds = app.add_subcommand("bounds", "Evaluate the error-bound and sample-size formulas");
  bounds->add_option("--n", params.n, "sample size")->required();
  bounds->add_option("--delta", params.delta, "confidence parameter")->required();
  bounds->add_option("--epsilon", params.epsilon, "target excess error")->required();
  bounds->add_option("--gamma", params.gamma, "minimum group mass")->required();
  bounds->add_option("--dg", params.dim_per_group, "per-group VC dimension")->required();
  bounds->add_option("--dG", params.dim_groups, "VC dimension of the group family")->required();
  bounds->add_option("--dGH", params.dim_sup_group, "sup over groups of per-group dims")
      ->required();
  bounds->add_option("--cardG", params.card_groups, "number of groups")->required();
  bounds->add_option("--bigC", params.big_c, "leading constant (default 4)");
  bounds->callback([&] { cmd_bounds(params); });

  auto* improper = app.add_subcommand("improper", "Train the two-phase ensemble learner");
  improper->add_option("instance", instance_path, "instance file with mass and target")
      ->required();
  improper->add_option("--n", n, "sample size")->required();
  improper->add_option("--eta", eta, "learning rate (default 0.5)");
  improper->add_option("--seed", seed, "sample seed (default 0)");
  improper->callback([&] { cmd_improper(instance_path, n, eta, seed); });

  auto* curve = app.add_subcommand("curve", "Learning-curve table over an n grid");
  curve->add_option("--learner", learner, "erm-concepts or improper")->required();
  curve->add_option("--spec", spec_text, "generator spec, e.g. threshold-line:points=64")
      ->required();
  curve->add_option("--n-grid", grid_text, "comma-separated sample sizes")->required();
  curve->add_option("--trials", trials, "trials per grid point")->required();
  curve->add_option("--seed", seed, "base seed (default 0)");
  curve->add_option("--out", out_path, "CSV output file")->required();
  curve->callback([&] { cmd_curve(learner, spec_text, grid_text, trials, seed, out_path); });

  auto* lemma1 = app.add_subcommand("lemma1", "Relative-deviation coverage experiment");
  lemma1->add_option("--spec", spec_text, "generator spec")->required();
  lemma1->add_option("--n", n, "sample size")->required();
  lemma1->add_option("--delta", delta, "confidence parameter")->required();
  lemma1->add_option("--trials", trials, "number of trials")->required();
  lemma1->add_option("--seed", seed, "base seed (default 0)");
  lemma1->callback([&] { cmd_lemma1(spec_text, n, delta, trials, seed); });

  auto* gen = app.add_subcommand("gen", "Materialize a generated instance");
  gen->add_option("--spec", spec_text, "generator spec")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");
  gen->callback([&] { cmd_gen(spec_text, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
