#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mglab/errors.hpp"
#include "mglab/instance.hpp"
#include "mglab/instance_io.hpp"
#include "test_util.hpp"

using namespace mglab;
using namespace mglab::testutil;

TEST_CASE("domain rejects duplicates and resolves names") {
  CHECK_THROWS_AS(FiniteDomain({"a", "b", "a"}), ValidationError);
  FiniteDomain d({"a", "b", "c"});
  CHECK(d.size() == 3);
  CHECK(d.index_of("b") == 1);
  CHECK_THROWS_AS(d.index_of("z"), ValidationError);
  CHECK(!d.find("z").has_value());
  CHECK(FiniteDomain().size() == 0);
}

TEST_CASE("group sorts, deduplicates, and validates members") {
  FiniteDomain d = make_domain(5);
  Group g("g", {3, 1, 3}, d);
  CHECK(g.members() == std::vector<PointIndex>{1, 3});
  CHECK(g.contains(3));
  CHECK(!g.contains(0));
  CHECK_THROWS_AS(Group("g", {5}, d), ValidationError);
  CHECK(Group("e", {}, d).empty());
}

TEST_CASE("group family requires unique ids") {
  FiniteDomain d = make_domain(2);
  std::vector<Group> gs;
  gs.emplace_back("g", std::vector<PointIndex>{0}, d);
  gs.emplace_back("g", std::vector<PointIndex>{1}, d);
  CHECK_THROWS_AS(GroupFamily(std::move(gs)), ValidationError);
}

TEST_CASE("explicit hypothesis validates labels") {
  CHECK_THROWS_AS(Hypothesis::explicit_fn("h", {1, 0, -1}), ValidationError);
  Hypothesis h = hyp_row("h", "+-+");
  CHECK(h.is_explicit());
  CHECK(h.denoted_count() == 1);
  CHECK(h.fixed_value(1) == -1);
}

TEST_CASE("implicit block pins some points and frees the rest") {
  Hypothesis b = Hypothesis::block("b", 4, {{1, Label{1}}, {3, Label{-1}}});
  CHECK(!b.is_explicit());
  CHECK(b.free_points() == std::vector<PointIndex>{0, 2});
  CHECK(b.denoted_count() == 4);
  CHECK(b.fixed_value(0) == 0);
  CHECK(b.fixed_value(1) == 1);
  CHECK(b.compatible({{0, Label{1}}, {1, Label{1}}}));
  CHECK(!b.compatible({{3, Label{1}}}));
  CHECK_THROWS_AS(Hypothesis::block("b", 2, {{0, Label{1}}, {0, Label{1}}}), ValidationError);
  CHECK_THROWS_AS(Hypothesis::block("b", 2, {{2, Label{1}}}), ValidationError);
  CHECK_THROWS_AS(Hypothesis::block("b", 2, {{0, Label{0}}}), ValidationError);
}

TEST_CASE("block expansion matches denoted count and fixed part") {
  Hypothesis b = Hypothesis::block("b", 3, {{0, Label{-1}}});
  auto all = expand_hypothesis(b);
  CHECK(all.size() == 4);
  for (const auto& f : all) CHECK(f[0] == -1);
}

TEST_CASE("hypothesis class validates ids and arity") {
  std::vector<Hypothesis> hs;
  hs.push_back(hyp_row("h", "++"));
  hs.push_back(hyp_row("h", "--"));
  CHECK_THROWS_AS(HypothesisClass(std::move(hs)), ValidationError);

  std::vector<Hypothesis> mixed;
  mixed.push_back(hyp_row("a", "++"));
  mixed.push_back(hyp_row("b", "+++"));
  CHECK_THROWS_AS(HypothesisClass(std::move(mixed)), ValidationError);

  CHECK(HypothesisClass().size() == 0);
}

TEST_CASE("collapse keeps first labels and flags conflicts") {
  LabeledSample s;
  s.examples = {{1, Label{1}}, {2, Label{-1}}, {1, Label{1}}};
  CollapsedSample c = collapse(s, 4);
  CHECK(!c.conflicting);
  CHECK(c.labels == std::vector<Label>{0, 1, -1, 0});

  s.examples.push_back({2, Label{1}});
  CollapsedSample c2 = collapse(s, 4);
  CHECK(c2.conflicting);
  CHECK(c2.labels[2] == -1);
}

TEST_CASE("instance validates mass and target shape") {
  FiniteDomain d = make_domain(2);
  GroupFamily gf;
  HypothesisClass hc;
  CHECK_THROWS_AS(FiniteInstance(d, gf, hc, {0.5, 0.6}, labels_of("++")), ValidationError);
  CHECK_THROWS_AS(FiniteInstance(d, gf, hc, {-0.1, 1.1}, labels_of("++")), ValidationError);
  CHECK_THROWS_AS(FiniteInstance(d, gf, hc, {0.5, 0.5}, labels_of("+")), ValidationError);
  CHECK_THROWS_AS(FiniteInstance(d, gf, hc, {0.5, 0.5}, std::vector<double>{0.5, 1.5}),
                  ValidationError);

  FiniteInstance inst(d, gf, hc, {0.25, 0.75}, labels_of("+-"));
  CHECK(inst.deterministic_target());
  CHECK(inst.target() == labels_of("+-"));

  FiniteInstance prob(d, gf, hc, {0.25, 0.75}, std::vector<double>{0.5, 1.0});
  CHECK(!prob.deterministic_target());
  CHECK_THROWS_AS(prob.target(), NonRealizableFixtureError);
}

TEST_CASE("restrict_class deduplicates patterns in order") {
  FiniteDomain d = make_domain(3);
  HypothesisClass constants({hyp_row("c+", "+++"), hyp_row("c-", "---")});
  Group g("g", {0, 1, 2}, d);
  auto patterns = restrict_class(constants, g);
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0] == labels_of("---"));
  CHECK(patterns[1] == labels_of("+++"));

  CHECK_THROWS_AS(restrict_class(constants, Group("e", {}, d)), ValidationError);
}

TEST_CASE("restrict_class of the full class on two points has four patterns") {
  FiniteDomain d = make_domain(2);
  HypothesisClass full(
      {hyp_row("a", "++"), hyp_row("b", "+-"), hyp_row("c", "-+"), hyp_row("d", "--")});
  auto patterns = restrict_class(full, Group("g", {0, 1}, d));
  CHECK(patterns.size() == 4);
}

TEST_CASE("restrict_class on a per-clause block family yields one pattern per block") {
  // Blocks over {x1, x2, x3, C1} that pin one clause variable positive, the
  // other two to the opposite of their polarity, and the clause point to +1.
  // Clause (x1 v x2 v ~x3): polarities (+1, +1, -1).
  FiniteDomain d({"x1", "x2", "x3", "C1"});
  std::vector<Hypothesis> blocks;
  blocks.push_back(Hypothesis::block(
      "H1^1", 4, {{0, Label{1}}, {1, Label{-1}}, {2, Label{1}}, {3, Label{1}}}));
  blocks.push_back(Hypothesis::block(
      "H1^2", 4, {{0, Label{-1}}, {1, Label{1}}, {2, Label{1}}, {3, Label{1}}}));
  blocks.push_back(Hypothesis::block(
      "H1^3", 4, {{0, Label{-1}}, {1, Label{-1}}, {2, Label{-1}}, {3, Label{1}}}));
  HypothesisClass cls(std::move(blocks));
  auto patterns = restrict_class(cls, Group("g1", {0, 1, 2, 3}, d));
  CHECK(patterns.size() == 3);
}

TEST_CASE("restrict_class expands free points inside the group") {
  FiniteDomain d = make_domain(3);
  HypothesisClass cls({Hypothesis::block("b", 3, {{0, Label{1}}})});
  auto patterns = restrict_class(cls, Group("g", {0, 1}, d));
  // Point 1 is free: two patterns (+1,-1) and (+1,+1).
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0] == labels_of("+-"));
  CHECK(patterns[1] == labels_of("++"));
}

TEST_CASE("group_mass sums member masses") {
  FiniteDomain d = make_domain(4);
  GroupFamily gf;
  HypothesisClass hc;
  FiniteInstance inst(d, gf, hc, {0.25, 0.25, 0.25, 0.25}, labels_of("++++"));
  CHECK(group_mass(inst, Group("g", {0, 2}, d)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(group_mass(inst, Group("e", {}, d)) == 0.0);
}

TEST_CASE("group_mass on the two-overlapping-regions fixture is 2/3") {
  FiniteDomain d({"a", "b", "c"});
  GroupFamily gf;
  HypothesisClass hc;
  const double third = 1.0 / 3.0;
  FiniteInstance inst(d, gf, hc, {third, third, third}, std::vector<double>{0.5, 2.0 / 3.0, 0.0});
  CHECK(group_mass(inst, Group("g1", {0, 1}, d)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("is_group_realizable on matching, probabilistic, and singleton cases") {
  FiniteDomain d1 = make_domain(1);
  FiniteInstance single(d1, GroupFamily({Group("g", {0}, d1)}),
                        HypothesisClass({hyp_row("h", "+")}), {1.0}, labels_of("+"));
  CHECK(is_group_realizable(single));

  FiniteInstance mismatch(d1, GroupFamily({Group("g", {0}, d1)}),
                          HypothesisClass({hyp_row("h", "-")}), {1.0}, labels_of("+"));
  CHECK(!is_group_realizable(mismatch));

  // Probabilistic labels that are not 0/1 on the support are never realizable.
  FiniteDomain d3({"a", "b", "c"});
  const double third = 1.0 / 3.0;
  FiniteInstance prob(d3, GroupFamily({Group("g1", {0, 1}, d3), Group("g2", {1, 2}, d3)}),
                      HypothesisClass({hyp_row("c+", "+++"), hyp_row("c-", "---")}),
                      {third, third, third}, std::vector<double>{0.5, 2.0 / 3.0, 0.0});
  CHECK(!is_group_realizable(prob));

  // Singleton groups with the two constants absorb any deterministic target.
  FiniteDomain d4 = make_domain(4);
  FiniteInstance singletons(
      d4,
      GroupFamily({Group("g0", {0}, d4), Group("g1", {1}, d4), Group("g2", {2}, d4),
                   Group("g3", {3}, d4)}),
      HypothesisClass({hyp_row("c+", "++++"), hyp_row("c-", "----")}),
      {0.25, 0.25, 0.25, 0.25}, labels_of("+--+"));
  CHECK(is_group_realizable(singletons));
}

TEST_CASE("is_group_realizable accepts exact 0/1 probability tables") {
  FiniteDomain d = make_domain(2);
  FiniteInstance inst(d, GroupFamily({Group("g", {0, 1}, d)}),
                      HypothesisClass({hyp_row("h", "+-")}), {0.5, 0.5},
                      std::vector<double>{1.0, 0.0});
  CHECK(is_group_realizable(inst));
}

TEST_CASE("is_group_realizable ignores zero-mass groups") {
  FiniteDomain d = make_domain(2);
  FiniteInstance inst(d, GroupFamily({Group("g", {1}, d)}), HypothesisClass({hyp_row("h", "++")}),
                      {1.0, 0.0}, labels_of("+-"));
  // g's only point has zero mass, so its mismatch does not matter.
  CHECK(is_group_realizable(inst));
}

TEST_CASE("is_group_realizable is monotone under adding hypotheses") {
  Rng rng(77);
  int flips = 0;
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstance ri = random_instance(rng, 6, 4, 3);
    const std::size_t n = ri.domain.size();
    std::vector<double> mass(n, 1.0 / static_cast<double>(n));
    std::vector<Label> target(n);
    for (auto& v : target) v = rng.next_bool() ? Label{1} : Label{-1};
    FiniteInstance base(ri.domain, ri.groups, ri.hypotheses, mass, target);

    std::vector<Hypothesis> enlarged = ri.hypotheses.members();
    enlarged.push_back(Hypothesis::explicit_fn("extra", target));
    FiniteInstance bigger(ri.domain, ri.groups, HypothesisClass(std::move(enlarged)), mass,
                          target);
    if (is_group_realizable(base) && !is_group_realizable(bigger)) ++flips;
    CHECK(is_group_realizable(bigger));  // target itself joined H
  }
  CHECK(flips == 0);
}

TEST_CASE("instance text round-trips and canonical form is a fixed point") {
  const std::string text =
      "points x1 x2 x3 C1\n"
      "group g1 : x1 x2 x3 C1\n"
      "hyp H1 : +1 -1 +1 +1\n"
      "hyp B1 : fixed x1=+1 C1=+1 free x2 x3\n"
      "mass : x1=0.25 x2=0.25 x3=0.25 C1=0.25\n"
      "target : +1 -1 +1 +1\n"
      "sample : C1=+1 x1=+1\n";
  ParsedInstance p = parse_instance_text(text);
  CHECK(p.domain.size() == 4);
  CHECK(p.groups.size() == 1);
  CHECK(p.hypotheses.size() == 2);
  CHECK(p.hypotheses.member(1).free_points() == std::vector<PointIndex>{1, 2});
  REQUIRE(p.sample.has_value());
  CHECK(p.sample->examples.size() == 2);
  CHECK(p.sample->examples[0] == std::pair<PointIndex, Label>{3, Label{1}});

  const std::string canonical = serialize_instance(p);
  ParsedInstance p2 = parse_instance_text(canonical);
  CHECK(serialize_instance(p2) == canonical);
  CHECK(p2.domain.points() == p.domain.points());
  CHECK(p2.mass == p.mass);
  CHECK(p2.target == p.target);
}

TEST_CASE("instance text parser rejects malformed input") {
  CHECK_THROWS_AS(parse_instance_text("group g :\n"), ValidationError);   // points not first
  CHECK_THROWS_AS(parse_instance_text("points a\npoints b\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\nwhat a : b\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\nhyp h : +1 -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\nhyp h : 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a b\nmass : a=1.0\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\nmass : a=0.5 a=0.5\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\ntarget : +1\ntarget : +1\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a\nhyp h : fixed a=+1 free a\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance_text("points a b\nhyp h : fixed a=+1\n"), ValidationError);
}

TEST_CASE("comments and blank lines are ignored") {
  ParsedInstance p = parse_instance_text(
      "# header\n\npoints a b\n# middle\ngroup g : a\nhyp h : +1 +1\n");
  CHECK(p.domain.size() == 2);
  CHECK(p.groups.size() == 1);
}

TEST_CASE("ids with separators or keywords are rejected at serialization") {
  FiniteDomain d({"ok"});
  ParsedInstance p;
  p.domain = d;
  p.groups = GroupFamily({Group("fixed", {0}, d)});
  p.hypotheses = HypothesisClass({hyp_row("h", "+")});
  CHECK_THROWS_AS(serialize_instance(p), ValidationError);
}

TEST_CASE("sample text round-trips") {
  FiniteDomain d({"a", "b"});
  LabeledSample s;
  s.examples = {{1, Label{-1}}, {0, Label{1}}, {1, Label{-1}}};
  const std::string text = serialize_sample(s, d);
  LabeledSample back = parse_sample_text(text, d);
  CHECK(back.examples == s.examples);
  CHECK_THROWS_AS(parse_sample_text("sample : z=+1\n", d), ValidationError);
  CHECK_THROWS_AS(parse_sample_text("nothing\n", d), ValidationError);
}

TEST_CASE("from_instance embeds mass and target") {
  FiniteDomain d = make_domain(2);
  FiniteInstance inst(d, GroupFamily({Group("g", {0, 1}, d)}),
                      HypothesisClass({hyp_row("h", "+-")}), {0.5, 0.5}, labels_of("+-"));
  ParsedInstance p = from_instance(inst);
  REQUIRE(p.mass.has_value());
  REQUIRE(p.target.has_value());
  FiniteInstance back = p.to_instance();
  CHECK(back.target() == inst.target());
  CHECK(back.mass() == inst.mass());

  ParsedInstance bare;
  bare.domain = d;
  bare.hypotheses = HypothesisClass({hyp_row("h", "+-")});
  CHECK_THROWS_AS(bare.to_instance(), ValidationError);
}
