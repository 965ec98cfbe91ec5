// Exact maximum-weight re-orientation: the subset-DP production engine, the
// breadth-first exclusion reference engine, and the permutation brute force,
// cross-checked on worked examples, exhaustive grids, and random instances.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lcos/errors.hpp"
#include "lcos/matrix.hpp"
#include "lcos/mtr.hpp"
#include "lcos/semicomplete.hpp"

namespace {

using lcos::Rational;

// Three vertices in a directed cycle a -> b -> c -> a, with weights that make
// [a, b, c] the unique optimum (reversing only c -> a).
lcos::SccProblem worked_cycle() {
  auto p = lcos::SccProblem::make({"a", "b", "c"});
  p.set_weight(0, 1, Rational(9, 10));
  p.set_weight(1, 0, Rational(1, 10));
  p.set_weight(1, 2, Rational(4, 5));
  p.set_weight(2, 1, Rational(1, 5));
  p.set_weight(2, 0, Rational(1, 10));
  p.set_weight(0, 2, Rational(9, 10));
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  p.add_edge(2, 0);
  return p;
}

lcos::SccProblem random_problem(std::mt19937_64& rng, int n, int denom,
                                bool allow_missing_edges) {
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  auto p = lcos::SccProblem::make(std::move(names));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto a = static_cast<std::int64_t>(rng() % (denom + 1));
      const auto b = static_cast<std::int64_t>(rng() % (denom + 1));
      p.set_weight(i, j, Rational(a, denom));
      p.set_weight(j, i, Rational(b, denom));
      if (allow_missing_edges && rng() % 4 == 0) continue;  // weights only
      if (a > b) {
        p.add_edge(i, j);
      } else if (b > a) {
        p.add_edge(j, i);
      } else if (rng() % 2 == 0) {
        p.add_edge(i, j);
      } else {
        p.add_edge(j, i);
      }
    }
  }
  return p;
}

void check_engines_agree(const lcos::SccProblem& problem) {
  const auto dp = lcos::enumerate_optimal(problem);
  const auto brute = lcos::brute_force_optimal(problem);
  CHECK(dp == brute);

  const auto pruned = lcos::enumerate_optimal_exclusion(problem);
  CHECK(pruned == brute);
  lcos::ExclusionOptions no_prune;
  no_prune.prune_supersets = false;
  const auto unpruned = lcos::enumerate_optimal_exclusion(problem, no_prune);
  CHECK(unpruned == brute);

  // No engine may emit the same order twice.
  std::set<std::vector<int>> seen;
  for (const auto& solution : dp) {
    CHECK(seen.insert(solution.order).second);
  }
}

}  // namespace

TEST_CASE("worked three-cycle: unique optimum and its reversal set") {
  const auto problem = worked_cycle();
  problem.validate();

  const auto best = lcos::max_weight_order(problem);
  REQUIRE(best.has_value());
  CHECK(best->order == std::vector<int>{0, 1, 2});
  CHECK(best->score == Rational(13, 5));  // 9/10 + 9/10 + 4/5
  CHECK(best->reversed == std::vector<std::pair<int, int>>{{2, 0}});

  const auto all = lcos::enumerate_optimal(problem);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == *best);
}

TEST_CASE("barring an edge forces its orientation") {
  const auto problem = worked_cycle();

  // c -> a may not be reversed: the best order placing c before a is [c,a,b].
  const auto constrained = lcos::max_weight_order(problem, {{2, 0}});
  REQUIRE(constrained.has_value());
  CHECK(constrained->order == std::vector<int>{2, 0, 1});
  CHECK(constrained->score == Rational(6, 5));  // 1/10 + 1/5 + 9/10
  CHECK(constrained->reversed == std::vector<std::pair<int, int>>{{1, 2}});

  // Barring the whole cycle is contradictory.
  CHECK_FALSE(
      lcos::max_weight_order(problem, {{0, 1}, {1, 2}, {2, 0}}).has_value());

  CHECK_THROWS_AS(lcos::max_weight_order(problem, {{0, 2}}),
                  lcos::ValidationError);  // not an edge of the problem
}

TEST_CASE("fully tied weights make every order optimal") {
  auto p = lcos::SccProblem::make({"a", "b", "c"});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) p.set_weight(i, j, Rational(1, 2));
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  p.add_edge(2, 0);

  const auto all = lcos::enumerate_optimal(p);
  CHECK(all.size() == 6);
  for (const auto& solution : all) CHECK(solution.score == Rational(3, 2));
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const auto& lhs, const auto& rhs) {
                         return lhs.order < rhs.order;
                       }));
  check_engines_agree(p);
}

TEST_CASE("a pair may carry weights without an edge") {
  // Two vertices, no edge: both orders score their direction's weight, and
  // the higher one wins without any reversal being reported.
  auto p = lcos::SccProblem::make({"a", "b"});
  p.set_weight(0, 1, Rational(3, 10));
  p.set_weight(1, 0, Rational(7, 10));

  const auto all = lcos::enumerate_optimal(p);
  REQUIRE(all.size() == 1);
  CHECK(all[0].order == std::vector<int>{1, 0});
  CHECK(all[0].score == Rational(7, 10));
  CHECK(all[0].reversed.empty());
  check_engines_agree(p);
}

TEST_CASE("problem construction is validated") {
  auto p = lcos::SccProblem::make({"a", "b"});
  p.set_weight(0, 1, Rational(1, 2));
  CHECK_THROWS_AS(p.set_weight(0, 2, Rational(1)), lcos::ValidationError);
  CHECK_THROWS_AS(p.set_weight(0, 1, Rational(-1, 2)), lcos::ValidationError);

  p.set_weight(1, 0, Rational(1, 2));
  p.add_edge(0, 1);
  CHECK_THROWS_AS(p.add_edge(1, 0), lcos::ValidationError);  // pair taken
  CHECK_THROWS_AS(p.add_edge(0, 2), lcos::ValidationError);

  auto missing = lcos::SccProblem::make({"a", "b"});
  missing.add_edge(0, 1);  // edge without weights
  CHECK_THROWS_AS(missing.validate(), lcos::ValidationError);

  CHECK_THROWS_AS(p.require_within_cap(1), lcos::CapacityError);
  try {
    p.require_within_cap(1);
  } catch (const lcos::CapacityError& e) {
    CHECK(std::string(e.what()).find("a") != std::string::npos);
    CHECK(std::string(e.what()).find("b") != std::string::npos);
  }
  p.require_within_cap(2);
}

TEST_CASE("from_component extracts weights for every pair, edges for links") {
  // 4-variable matrix whose graph is one strong component containing a tie:
  // the tied pair contributes weights but no edge.
  std::vector<lcos::VariableSpec> vars = {
      {"a", ""}, {"b", ""}, {"c", ""}, {"d", ""}};
  lcos::ConsistencyMatrix m(vars, 10);
  const int cells[4][4] = {{-1, 7, 5, 2},   // a->b 7, a->c 5 (tie), a->d 2
                           {3, -1, 8, 6},   // b->c 8
                           {5, 2, -1, 9},   // c->d 9
                           {8, 4, 1, -1}};  // d->a 8: closes the cycle
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m.set_numerator(i, j, cells[i][j]);

  const auto graph = lcos::SemiCompleteDigraph::from_matrix(m);
  REQUIRE(graph.bidirected(0, 2));
  const auto problem =
      lcos::SccProblem::from_component(graph, {0, 1, 2, 3});
  problem.validate();
  CHECK(problem.names == std::vector<std::string>{"a", "b", "c", "d"});

  // Every ordered pair carries its matrix weight.
  CHECK(problem.weight[0][1] == Rational(7, 10));
  CHECK(problem.weight[1][0] == Rational(3, 10));
  CHECK(problem.weight[0][2] == Rational(1, 2));
  CHECK(problem.weight[2][0] == Rational(1, 2));

  // Edges exist only for the one-way links.
  std::set<std::pair<int, int>> edges(problem.edges.begin(),
                                      problem.edges.end());
  CHECK(edges == std::set<std::pair<int, int>>{
                     {0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 0}});
  check_engines_agree(problem);
}

TEST_CASE("capacity guards") {
  std::vector<std::string> names;
  for (int v = 0; v < 9; ++v) names.push_back("v" + std::to_string(v));
  auto p = lcos::SccProblem::make(names);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (i != j) p.set_weight(i, j, Rational(1, 2));
  CHECK_THROWS_AS(lcos::brute_force_optimal(p), lcos::CapacityError);

  std::vector<std::string> many;
  for (int v = 0; v < 25; ++v) many.push_back("v" + std::to_string(v));
  auto big = lcos::SccProblem::make(many);
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 25; ++j)
      if (i != j) big.set_weight(i, j, Rational(1, 2));
  CHECK_THROWS_AS(lcos::enumerate_optimal(big), lcos::CapacityError);
}

TEST_CASE("engines agree on random instances") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    const int denom = 1 + static_cast<int>(rng() % 10);
    const auto p = random_problem(rng, n, denom, trial % 2 == 0);
    check_engines_agree(p);
  }
}

TEST_CASE("dp scales to component sizes the brute force cannot touch") {
  std::mt19937_64 rng(5);
  const auto p = random_problem(rng, 14, 10, false);
  const auto solutions = lcos::enumerate_optimal(p);
  REQUIRE_FALSE(solutions.empty());
  const auto single = lcos::max_weight_order(p);
  REQUIRE(single.has_value());
  CHECK(solutions.front().score == single->score);

  // Every reported optimum shares the score, and recomputing each order's
  // value from the weights confirms it.
  for (const auto& solution : solutions) {
    Rational total(0);
    std::vector<int> pos(p.size());
    for (int i = 0; i < p.size(); ++i) pos[solution.order[i]] = i;
    for (int u = 0; u < p.size(); ++u)
      for (int v = 0; v < p.size(); ++v)
        if (u != v && pos[u] < pos[v] && p.has_weight[u][v])
          total += p.weight[u][v];
    CHECK(total == solution.score);

    // reversed must be exactly the problem edges the order flips.
    std::set<std::pair<int, int>> expect;
    for (const auto& [a, b] : p.edges)
      if (pos[a] > pos[b]) expect.insert({a, b});
    CHECK(std::set<std::pair<int, int>>(solution.reversed.begin(),
                                        solution.reversed.end()) == expect);
  }
}

TEST_CASE("exclusion search trace records its probes") {
  const auto problem = worked_cycle();
  std::vector<lcos::ExclusionProbe> trace;
  const auto solutions =
      lcos::enumerate_optimal_exclusion(problem, {}, &trace);
  REQUIRE(solutions.size() == 1);
  REQUIRE_FALSE(trace.empty());

  // The first probe runs with nothing barred and already finds the optimum.
  CHECK(trace.front().barred.empty());
  REQUIRE(trace.front().score.has_value());
  CHECK(*trace.front().score == Rational(13, 5));
  CHECK(trace.front().verdict == "improved");

  for (const auto& probe : trace) {
    CHECK((probe.verdict == "improved" || probe.verdict == "tied" ||
           probe.verdict == "worse" || probe.verdict == "infeasible"));
    CHECK(probe.score.has_value() == (probe.verdict != "infeasible"));
  }

  // Pruning only skips work; it never changes the answer. On a problem with
  // many ties the pruned run must probe no more sets than the unpruned run.
  auto tied = lcos::SccProblem::make({"a", "b", "c", "d"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) tied.set_weight(i, j, Rational(1, 2));
  tied.add_edge(0, 1);
  tied.add_edge(1, 2);
  tied.add_edge(2, 3);
  tied.add_edge(3, 0);
  tied.add_edge(0, 2);
  tied.add_edge(1, 3);

  std::vector<lcos::ExclusionProbe> pruned_trace;
  std::vector<lcos::ExclusionProbe> unpruned_trace;
  lcos::ExclusionOptions no_prune;
  no_prune.prune_supersets = false;
  const auto with = lcos::enumerate_optimal_exclusion(tied, {}, &pruned_trace);
  const auto without =
      lcos::enumerate_optimal_exclusion(tied, no_prune, &unpruned_trace);
  CHECK(with == without);
  CHECK(with.size() == 24);  // every order of 4 tied vertices
  CHECK(pruned_trace.size() <= unpruned_trace.size());
}
