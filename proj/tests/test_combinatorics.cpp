#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mglab/combinatorics.hpp"
#include "mglab/errors.hpp"
#include "test_util.hpp"

using namespace mglab;
using namespace mglab::testutil;

namespace {

/// View of explicit label rows.
BinaryClassView view_of(const std::vector<std::vector<Label>>& rows) {
  return view_of_labelings(rows);
}

std::vector<std::vector<Label>> threshold_rows(std::size_t n) {
  // n monotone step functions (cut at 1..n) plus the all-positive constant.
  std::vector<std::vector<Label>> rows;
  for (std::size_t cut = 0; cut <= n; ++cut) {
    std::vector<Label> row(n);
    for (std::size_t p = 0; p < n; ++p) row[p] = p >= cut ? Label{1} : Label{-1};
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Quadratic-time shattering oracle over explicit subsets, written without
/// bitmask tricks.
std::uint64_t oracle_shattering(const std::vector<std::vector<Label>>& rows, std::size_t k) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  if (rows.empty()) return 0;
  if (k > n) k = n;
  if (n == 0) return 1;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  std::uint64_t best = 0;
  while (true) {
    std::vector<std::vector<Label>> induced;
    for (const auto& row : rows) {
      std::vector<Label> sub;
      for (std::size_t i : subset) sub.push_back(row[i]);
      if (std::find(induced.begin(), induced.end(), sub) == induced.end()) {
        induced.push_back(sub);
      }
    }
    best = std::max<std::uint64_t>(best, induced.size());
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_CASE("shattering coefficient on pinned classes") {
  auto two_constants = view_of({labels_of("+++++"), labels_of("-----")});
  CHECK(shattering_coefficient(two_constants, 3) == 2);

  auto full = view_of_labelings(all_labelings(5));
  CHECK(shattering_coefficient(full, 3) == 8);

  auto thresholds = view_of(threshold_rows(10));
  CHECK(thresholds.num_patterns() == 11);
  CHECK(shattering_coefficient(thresholds, 4) == 5);
}

TEST_CASE("shattering coefficient clamps k beyond the point count") {
  auto thresholds = view_of(threshold_rows(10));
  CHECK(shattering_coefficient(thresholds, 10) == 11);
  CHECK(shattering_coefficient(thresholds, 400) == 11);
  CHECK_THROWS_AS(shattering_coefficient(thresholds, 0), ValidationError);
}

TEST_CASE("shattering coefficient matches a quadratic oracle on random classes") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.next_below(7);
    const std::size_t count = 1 + rng.next_below(10);
    std::vector<std::vector<Label>> rows;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Label> row(n);
      for (auto& v : row) v = rng.next_bool() ? Label{1} : Label{-1};
      rows.push_back(std::move(row));
    }
    auto view = view_of(rows);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      CHECK(shattering_coefficient(view, k) == oracle_shattering(rows, k));
    }
  }
}

TEST_CASE("shattering coefficient enforces the subset cap") {
  std::vector<std::vector<Label>> rows = threshold_rows(40);
  auto view = view_of(rows);
  Limits limits;
  limits.max_subsets = 1000;
  CHECK_THROWS_AS(shattering_coefficient(view, 20, limits), CapExceededError);
}

TEST_CASE("vc dimension on pinned classes") {
  CHECK(vc_dimension(view_of({labels_of("+++"), labels_of("---")})) == 1);
  CHECK(vc_dimension(view_of_labelings(all_labelings(5))) == 5);
  CHECK(vc_dimension(view_of({labels_of("++-")})) == 0);
  CHECK(vc_dimension(BinaryClassView(0, {})) == 0);

  // Singleton-set family as 0/1 indicators.
  FiniteDomain d = make_domain(6);
  std::vector<Group> gs;
  for (std::size_t i = 0; i < 6; ++i) {
    gs.emplace_back("g" + std::to_string(i), std::vector<PointIndex>{static_cast<PointIndex>(i)},
                    d);
  }
  CHECK(vc_dimension(view_of_groups(d, GroupFamily(std::move(gs)))) == 1);
}

TEST_CASE("vc dimension respects the point cap") {
  auto view = view_of(threshold_rows(30));
  Limits limits;
  limits.max_vc_points = 20;
  CHECK_THROWS_AS(vc_dimension(view, limits), CapExceededError);
  limits.max_vc_points = 30;
  CHECK(vc_dimension(view, limits) == 1);
}

TEST_CASE("singleton groups and constants reconstruct the gap") {
  FiniteDomain d = make_domain(8);
  std::vector<Group> gs;
  for (std::size_t i = 0; i < 8; ++i) {
    gs.emplace_back("g" + std::to_string(i), std::vector<PointIndex>{static_cast<PointIndex>(i)},
                    d);
  }
  GroupFamily family(std::move(gs));
  HypothesisClass hc({Hypothesis::explicit_fn("c+", std::vector<Label>(8, 1)),
                      Hypothesis::explicit_fn("c-", std::vector<Label>(8, -1))});
  CHECK(vc_dimension(view_of_groups(d, family)) == 1);
  CHECK(vc_dimension(view_of_hypotheses(d, hc)) == 1);
  auto members = enumerate_concepts(family, hc, d);
  CHECK(members.size() == 256);
  CHECK(vc_dimension(view_of_labelings(members)) == 8);
}

TEST_CASE("view_of_hypotheses expands blocks subject to the cap") {
  FiniteDomain d = make_domain(4);
  HypothesisClass hc({Hypothesis::block("b", 4, {{0, Label{1}}})});
  auto view = view_of_hypotheses(d, hc);
  CHECK(view.num_patterns() == 8);

  Limits limits;
  limits.max_enumeration = 4;
  CHECK_THROWS_AS(view_of_hypotheses(d, hc, limits), CapExceededError);
}

TEST_CASE("sauer_bound pinned values") {
  CHECK(sauer_bound(200, 1) == 201);
  CHECK(sauer_bound(4, 2) == 11);
  CHECK(sauer_bound(3, 5) == 8);
  CHECK(sauer_bound(0, 0) == 1);
  CHECK(sauer_bound(7, 0) == 1);
}

TEST_CASE("sauer_bound matches a Pascal-triangle oracle") {
  for (std::uint64_t k = 0; k <= 40; ++k) {
    std::vector<BigInt> row{1};  // row of C(k, i)
    for (std::uint64_t i = 1; i <= k; ++i) {
      row.push_back(row.back() * (k - i + 1) / i);
    }
    BigInt partial = 0;
    for (std::uint64_t d = 0; d <= k + 2; ++d) {
      if (d <= k) partial += row[d];
      CHECK(sauer_bound(k, d) == partial);
    }
  }
}

TEST_CASE("shattering is bounded by the Sauer bound at the class's vc dimension") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.next_below(6);
    const std::size_t count = 1 + rng.next_below(12);
    std::vector<std::vector<Label>> rows;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Label> row(n);
      for (auto& v : row) v = rng.next_bool() ? Label{1} : Label{-1};
      rows.push_back(std::move(row));
    }
    auto view = view_of(rows);
    const std::size_t d = vc_dimension(view);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(BigInt(shattering_coefficient(view, k)) <= sauer_bound(k, d));
    }
  }
}

TEST_CASE("shattering coefficient is monotone in k and antitone in patterns") {
  auto rows = threshold_rows(9);
  auto view = view_of(rows);
  std::uint64_t prev = 0;
  for (std::size_t k = 1; k <= 9; ++k) {
    std::uint64_t cur = shattering_coefficient(view, k);
    CHECK(cur >= prev);
    prev = cur;
  }
  rows.pop_back();
  auto smaller = view_of(rows);
  for (std::size_t k = 1; k <= 9; ++k) {
    CHECK(shattering_coefficient(smaller, k) <= shattering_coefficient(view, k));
  }
}

TEST_CASE("log_big is accurate for small and huge integers") {
  CHECK(log_big(BigInt(201)) == doctest::Approx(std::log(201.0)).epsilon(1e-15));
  BigInt big = BigInt(1) << 400;
  CHECK(log_big(big) == doctest::Approx(400.0 * std::log(2.0)).epsilon(1e-12));
  BigInt huge = sauer_bound(4096, 300);
  // Compare against lgamma-based log of the dominant term within loose slack.
  double lg = 0.0;
  for (int i = 0; i < 300; ++i) {
    lg += std::log(4096.0 - i) - std::log(300.0 - i);
  }
  CHECK(log_big(huge) > lg);             // sum exceeds its largest term
  CHECK(log_big(huge) < lg + std::log(301.0));  // and is below 301 of them
  CHECK_THROWS_AS(log_big(BigInt(0)), ValidationError);
}

TEST_CASE("views accept exactly 64 points") {
  std::vector<std::vector<Label>> rows = threshold_rows(64);
  auto view = view_of(rows);
  CHECK(view.num_points() == 64);
  CHECK(view.num_patterns() == 65);
  CHECK(shattering_coefficient(view, 64) == 65);
  Limits limits;
  limits.max_vc_points = 64;
  CHECK(vc_dimension(view, limits) == 1);
}
