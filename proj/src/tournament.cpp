#include "lcos/tournament.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lcos/errors.hpp"

namespace lcos {

AcyclicTournament::AcyclicTournament(std::vector<std::string> order_in)
    : order(std::move(order_in)) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!ranks_.emplace(order[i], static_cast<int>(i)).second) {
      throw ValidationError("vertex '" + order[i] + "' appears twice in order");
    }
  }
}

int AcyclicTournament::rank(const std::string& name) const {
  const auto it = ranks_.find(name);
  if (it == ranks_.end()) {
    throw ValidationError("vertex '" + name + "' is not in this order");
  }
  return it->second;
}

Rational tournament_score(const ConsistencyMatrix& matrix,
                          const AcyclicTournament& tournament) {
  std::vector<int> indices;
  indices.reserve(tournament.order.size());
  for (const auto& name : tournament.order) {
    const int idx = matrix.index_of(name);
    if (idx < 0) {
      throw ValidationError("order vertex '" + name +
                            "' is not in the consistency matrix");
    }
    indices.push_back(idx);
  }
  Rational score(0);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      score += matrix.score(indices[i], indices[j]);
    }
  }
  return score;
}

StripResult strip_bidirected(const SemiCompleteDigraph& graph) {
  StripResult result{Digraph(graph.size()), {}};
  for (int i = 0; i < graph.size(); ++i) {
    for (int j = i + 1; j < graph.size(); ++j) {
      switch (graph.link(i, j)) {
        case PairLink::forward:
          result.reduced.add_edge(i, j);
          break;
        case PairLink::backward:
          result.reduced.add_edge(j, i);
          break;
        case PairLink::bidirected:
          result.stripped.emplace_back(i, j);
          break;
      }
    }
  }
  return result;
}

std::vector<Digraph> compose(
    const std::vector<std::vector<ReversalSolution>>& component_solutions,
    const StripResult& stripped, const SccPartition& partition) {
  const Digraph& reduced = stripped.reduced;
  const std::size_t component_count = partition.components.size();
  if (component_solutions.size() != component_count) {
    throw ValidationError("one solution list per component is required");
  }
  for (const auto& solutions : component_solutions) {
    if (solutions.empty()) {
      throw ValidationError("a component has no solutions to compose");
    }
  }

  std::vector<Digraph> skeletons;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::size_t> choice(component_count, 0);
  while (true) {
    // Global rank of every vertex inside its own component under the chosen
    // solution; cross-component edges never change direction.
    std::vector<int> rank(reduced.size(), 0);
    for (std::size_t c = 0; c < component_count; ++c) {
      const auto& order = component_solutions[c][choice[c]].order;
      const auto& members = partition.components[c];
      if (order.size() != members.size()) {
        throw ValidationError("component solution covers the wrong vertex set");
      }
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        rank[members[order[pos]]] = static_cast<int>(pos);
      }
    }
    Digraph skeleton(reduced.size());
    for (const auto& [u, v] : reduced.edges()) {
      if (partition.component_of[u] != partition.component_of[v]) {
        skeleton.add_edge(u, v);
      } else if (rank[u] < rank[v]) {
        skeleton.add_edge(u, v);
      } else {
        skeleton.add_edge(v, u);
      }
    }
    std::vector<std::pair<int, int>> key = skeleton.edges();
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) {
      skeletons.push_back(std::move(skeleton));
    }
    // Advance the mixed-radix choice vector.
    std::size_t c = 0;
    while (c < component_count &&
           ++choice[c] == component_solutions[c].size()) {
      choice[c] = 0;
      ++c;
    }
    if (c == component_count) break;
  }
  return skeletons;
}

namespace {

// Unique topological order of a complete acyclic tournament: in-degrees are
// exactly 0..n-1.
std::vector<int> tournament_order(const Digraph& graph) {
  std::vector<int> indegree(graph.size(), 0);
  for (const auto& [u, v] : graph.edges()) {
    (void)u;
    ++indegree[v];
  }
  std::vector<int> order(graph.size(), -1);
  for (int v = 0; v < graph.size(); ++v) {
    const int pos = indegree[v];
    if (pos < 0 || pos >= graph.size() || order[pos] != -1) {
      throw ValidationError("graph is not a complete acyclic tournament");
    }
    order[pos] = v;
  }
  return order;
}

void complete_orders(const Digraph& graph,
                     const std::vector<std::pair<int, int>>& stripped,
                     std::size_t next, const std::vector<std::string>& names,
                     std::vector<AcyclicTournament>& out) {
  if (next == stripped.size()) {
    std::vector<std::string> order;
    order.reserve(names.size());
    for (int v : tournament_order(graph)) order.push_back(names[v]);
    out.emplace_back(std::move(order));
    return;
  }
  const auto [u, v] = stripped[next];
  const bool u_to_v = graph.reachable(u, v);
  const bool v_to_u = graph.reachable(v, u);
  if (u_to_v && v_to_u) {
    throw ValidationError("skeleton contains a cycle");
  }
  if (u_to_v) {
    Digraph extended = graph;
    extended.add_edge(u, v);
    complete_orders(extended, stripped, next + 1, names, out);
  } else if (v_to_u) {
    Digraph extended = graph;
    extended.add_edge(v, u);
    complete_orders(extended, stripped, next + 1, names, out);
  } else {
    Digraph forward = graph;
    forward.add_edge(u, v);
    complete_orders(forward, stripped, next + 1, names, out);
    Digraph backward = graph;
    backward.add_edge(v, u);
    complete_orders(backward, stripped, next + 1, names, out);
  }
}

}  // namespace

std::vector<AcyclicTournament> reintroduce_bidirected(
    const Digraph& skeleton, const std::vector<std::pair<int, int>>& stripped,
    const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != skeleton.size()) {
    throw ValidationError("one name per skeleton vertex is required");
  }
  std::vector<AcyclicTournament> out;
  complete_orders(skeleton, stripped, 0, names, out);
  return out;
}

namespace {

// Non-informative removal, one pass or to fixpoint; returns the informative
// subgraph and appends removed names in matrix order per pass.
SemiCompleteDigraph drop_non_informative(SemiCompleteDigraph graph,
                                         bool fixpoint,
                                         std::vector<std::string>& removed) {
  while (true) {
    const std::vector<int> drop = graph.non_informative();
    for (int v : drop) removed.push_back(graph.name(v));
    if (drop.empty()) return graph;
    graph = remove_vertices(graph, drop);
    if (!fixpoint) return graph;
  }
}

}  // namespace

OrderDistribution assemble_distribution(const ConsistencyMatrix& matrix,
                                        const AssembleOptions& options) {
  matrix.require_complete();
  OrderDistribution distribution;
  SemiCompleteDigraph graph = drop_non_informative(
      SemiCompleteDigraph::from_matrix(matrix),
      options.noninformative_fixpoint, distribution.removed);

  if (graph.size() == 0) {
    distribution.score = Rational(0);
    distribution.tournaments.emplace_back(std::vector<std::string>{});
    return distribution;
  }

  const StripResult stripped = strip_bidirected(graph);
  const SccPartition partition = scc_decompose(stripped.reduced);

  std::vector<std::vector<ReversalSolution>> component_solutions;
  component_solutions.reserve(partition.components.size());
  for (const auto& component : partition.components) {
    SccProblem problem = SccProblem::from_component(graph, component);
    problem.require_within_cap(options.scc_cap);
    component_solutions.push_back(enumerate_optimal(problem));
  }

  const std::vector<Digraph> skeletons =
      compose(component_solutions, stripped, partition);

  std::set<AcyclicTournament> unique;
  for (const Digraph& skeleton : skeletons) {
    for (AcyclicTournament& t :
         reintroduce_bidirected(skeleton, stripped.stripped, graph.names())) {
      unique.insert(std::move(t));
    }
  }
  distribution.tournaments.assign(unique.begin(), unique.end());

  distribution.score = tournament_score(matrix, distribution.tournaments.front());
  for (const AcyclicTournament& t : distribution.tournaments) {
    if (tournament_score(matrix, t) != distribution.score) {
      throw Error(ExitCode::invalid_input,
                  "internal: distribution members disagree on score");
    }
  }
  return distribution;
}

OrderDistribution brute_force_distribution(const ConsistencyMatrix& matrix,
                                           const AssembleOptions& options) {
  matrix.require_complete();
  OrderDistribution distribution;
  SemiCompleteDigraph graph = drop_non_informative(
      SemiCompleteDigraph::from_matrix(matrix),
      options.noninformative_fixpoint, distribution.removed);

  if (graph.size() == 0) {
    distribution.score = Rational(0);
    distribution.tournaments.emplace_back(std::vector<std::string>{});
    return distribution;
  }
  if (graph.size() > 8) {
    throw CapacityError("brute-force distribution is limited to 8 vertices");
  }

  std::vector<int> perm(graph.size());
  for (int i = 0; i < graph.size(); ++i) perm[i] = i;
  bool have_best = false;
  Rational best(0);
  std::vector<AcyclicTournament> winners;
  do {
    std::vector<std::string> order;
    order.reserve(perm.size());
    for (int v : perm) order.push_back(graph.name(v));
    AcyclicTournament t(std::move(order));
    const Rational score = tournament_score(matrix, t);
    if (!have_best || score > best) {
      have_best = true;
      best = score;
      winners.clear();
    }
    if (score == best) winners.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::sort(winners.begin(), winners.end());
  distribution.score = best;
  distribution.tournaments = std::move(winners);
  return distribution;
}

std::vector<AcyclicTournament> expand_removed(
    const OrderDistribution& distribution) {
  std::vector<AcyclicTournament> result;
  for (const AcyclicTournament& member : distribution.tournaments) {
    std::vector<std::vector<std::string>> partial = {member.order};
    for (const std::string& name : distribution.removed) {
      std::vector<std::vector<std::string>> next;
      for (const auto& order : partial) {
        for (std::size_t pos = 0; pos <= order.size(); ++pos) {
          std::vector<std::string> extended = order;
          extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(pos),
                          name);
          next.push_back(std::move(extended));
        }
      }
      partial = std::move(next);
    }
    for (auto& order : partial) result.emplace_back(std::move(order));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

nlohmann::ordered_json OrderDistribution::to_json() const {
  nlohmann::ordered_json j;
  j["score"] = to_fraction_string(score);
  j["removed"] = removed;
  j["tournaments"] = nlohmann::ordered_json::array();
  for (const auto& t : tournaments) j["tournaments"].push_back(t.order);
  j["count"] = tournaments.size();
  return j;
}

OrderDistribution OrderDistribution::from_json(const nlohmann::json& j) {
  try {
    OrderDistribution d;
    d.score = parse_fraction(j.at("score").get<std::string>());
    d.removed = j.at("removed").get<std::vector<std::string>>();
    for (const auto& order : j.at("tournaments")) {
      d.tournaments.emplace_back(order.get<std::vector<std::string>>());
    }
    if (j.at("count").get<std::size_t>() != d.tournaments.size()) {
      throw ValidationError("distribution count does not match tournaments");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed distribution JSON: ") +
                          e.what());
  }
}

}  // namespace lcos
