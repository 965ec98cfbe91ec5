#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "lcos/digraph.hpp"
#include "lcos/matrix.hpp"
#include "lcos/mtr.hpp"
#include "lcos/order.hpp"
#include "lcos/semicomplete.hpp"

namespace lcos {

// Every maximum-score acyclic tournament over the informative vertices, all
// sharing one exact score. Uniform weights: no member is preferred.
struct OrderDistribution {
  Rational score{0};
  std::vector<std::string> removed;       // non-informative vertices
  std::vector<AcyclicTournament> tournaments;  // sorted, deduplicated

  nlohmann::ordered_json to_json() const;
  static OrderDistribution from_json(const nlohmann::json& j);
};

// Sum of C(u -> v) over all ordered pairs u before v. This is the objective
// the distribution maximizes; it includes tied pairs, whose contribution is
// direction-independent.
Rational tournament_score(const ConsistencyMatrix& matrix,
                          const AcyclicTournament& tournament);

// Bidirected pairs taken out: the one-way arcs as a digraph plus the list of
// removed pairs (i < j, local indices of `graph`).
struct StripResult {
  Digraph reduced;
  std::vector<std::pair<int, int>> stripped;
};

StripResult strip_bidirected(const SemiCompleteDigraph& graph);

// Cartesian product of per-component optimal orders laid over the reduced
// graph: each choice re-orients the intra-component edges, cross-component
// edges stay put. Output DAGs ("skeletons") cover the reduced vertex set.
std::vector<Digraph> compose(
    const std::vector<std::vector<ReversalSolution>>& component_solutions,
    const StripResult& stripped, const SccPartition& partition);

// Adds the stripped pairs back to a skeleton. A pair with a connecting path
// is forced into that direction; an incomparable pair branches both ways.
// Result: every acyclic completion, i.e. the tournaments the skeleton stands
// for, as vertex orders over `names`.
std::vector<AcyclicTournament> reintroduce_bidirected(
    const Digraph& skeleton, const std::vector<std::pair<int, int>>& stripped,
    const std::vector<std::string>& names);

struct AssembleOptions {
  int scc_cap = 20;
  // Re-run non-informative removal until stable instead of the default
  // single pass.
  bool noninformative_fixpoint = false;
};

// The full solve: matrix -> semi-complete digraph -> drop non-informative
// vertices -> strip ties -> per-component exact solves -> compose ->
// reintroduce -> deduplicate.
OrderDistribution assemble_distribution(const ConsistencyMatrix& matrix,
                                        const AssembleOptions& options = {});

// Scores every permutation of the informative vertices directly against the
// matrix. Independent check for assemble_distribution; refuses more than 8
// informative vertices.
OrderDistribution brute_force_distribution(const ConsistencyMatrix& matrix,
                                           const AssembleOptions& options = {});

// Inserts the removed vertices into every position of every member (the
// "expanded" view some consumers want). Count multiplies accordingly.
std::vector<AcyclicTournament> expand_removed(
    const OrderDistribution& distribution);

}  // namespace lcos
