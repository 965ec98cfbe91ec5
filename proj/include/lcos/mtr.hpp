#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcos/rational.hpp"
#include "lcos/semicomplete.hpp"

namespace lcos {

// One strongly connected subproblem: re-orient `edges` (reversing as few
// weighted votes as possible) so the component becomes acyclic. Weights are
// directional supports w(u -> v); a pair may carry weights without carrying
// an edge, in which case the weights still contribute to every order's score
// but no orientation is constrained.
struct SccProblem {
  std::vector<std::string> names;                 // local index -> vertex name
  std::vector<std::vector<Rational>> weight;      // w[u][v], 0 when absent
  std::vector<std::vector<bool>> has_weight;
  std::vector<std::pair<int, int>> edges;         // current orientations

  int size() const { return static_cast<int>(names.size()); }

  static SccProblem make(std::vector<std::string> names);
  void set_weight(int u, int v, const Rational& w);
  void add_edge(int u, int v);

  // Builds the subproblem for one component of a semi-complete digraph;
  // bidirected pairs are expected to be stripped already.
  static SccProblem from_component(const SemiCompleteDigraph& graph,
                                   const std::vector<int>& component);

  // Throws CapacityError (naming the vertices) when size() > cap.
  void require_within_cap(int cap) const;

  void validate() const;
};

// A maximum-weight acyclic re-orientation, reported both as the vertex order
// and as the set of original edges that the order reverses.
struct ReversalSolution {
  std::vector<int> order;                         // local indices
  std::vector<std::pair<int, int>> reversed;      // subset of problem edges
  Rational score;                                 // sum of w over chosen arcs

  bool operator==(const ReversalSolution&) const = default;
};

// Maximum-weight order with the listed edges barred from reversal (their
// current orientation becomes a hard precedence). nullopt iff the barred
// constraints are contradictory (i.e. force a cycle). Deterministic
// tie-break; use enumerate_optimal for the full optimum set.
std::optional<ReversalSolution> max_weight_order(
    const SccProblem& problem,
    const std::vector<std::pair<int, int>>& barred = {});

// All optimal orders, lexicographically sorted. Subset-DP over vertex sets;
// this is the production engine.
std::vector<ReversalSolution> enumerate_optimal(const SccProblem& problem);

// Reference engine: breadth-first exclusion search that re-solves under
// growing "may not reverse" sets, with memoized failures. Kept for
// cross-checking; produces the same solution set as enumerate_optimal.
struct ExclusionOptions {
  bool prune_supersets = true;  // drop queued supersets of failed sets
};

struct ExclusionProbe {
  std::vector<std::pair<int, int>> barred;
  std::optional<Rational> score;  // nullopt = infeasible
  std::string verdict;            // "improved" | "tied" | "worse" | "infeasible"
};

std::vector<ReversalSolution> enumerate_optimal_exclusion(
    const SccProblem& problem, const ExclusionOptions& options = {},
    std::vector<ExclusionProbe>* trace = nullptr);

// Scores every permutation; refuses size() > 8. Test oracle.
std::vector<ReversalSolution> brute_force_optimal(const SccProblem& problem);

}  // namespace lcos
