#include "lcos/mtr.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <set>
#include <unordered_set>

#include "lcos/errors.hpp"

namespace lcos {

SccProblem SccProblem::make(std::vector<std::string> names) {
  SccProblem p;
  p.names = std::move(names);
  const int n = p.size();
  p.weight.assign(n, std::vector<Rational>(n, Rational(0)));
  p.has_weight.assign(n, std::vector<bool>(n, false));
  return p;
}

void SccProblem::set_weight(int u, int v, const Rational& w) {
  if (u < 0 || v < 0 || u >= size() || v >= size() || u == v) {
    throw ValidationError("weight endpoints out of range");
  }
  if (w < Rational(0)) {
    throw ValidationError("weights must be non-negative");
  }
  weight[u][v] = w;
  has_weight[u][v] = true;
}

void SccProblem::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size() || u == v) {
    throw ValidationError("edge endpoints out of range");
  }
  for (const auto& [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) {
      throw ValidationError("pair already has an edge");
    }
  }
  edges.emplace_back(u, v);
}

SccProblem SccProblem::from_component(const SemiCompleteDigraph& graph,
                                      const std::vector<int>& component) {
  std::vector<std::string> names;
  names.reserve(component.size());
  for (int v : component) names.push_back(graph.name(v));
  SccProblem p = make(std::move(names));
  const int m = static_cast<int>(component.size());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) p.set_weight(a, b, graph.weight(component[a], component[b]));
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      // Bidirected pairs stay edgeless: their weights are equal, so they
      // shift every order's score by the same amount and constrain nothing.
      const PairLink link =
          component[a] < component[b]
              ? graph.link(component[a], component[b])
              : graph.link(component[b], component[a]);
      const bool a_lower = component[a] < component[b];
      if (link == PairLink::forward) {
        a_lower ? p.add_edge(a, b) : p.add_edge(b, a);
      } else if (link == PairLink::backward) {
        a_lower ? p.add_edge(b, a) : p.add_edge(a, b);
      }
    }
  }
  return p;
}

void SccProblem::require_within_cap(int cap) const {
  if (size() <= cap) return;
  std::string members;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) members += ", ";
    members += names[i];
  }
  throw CapacityError("strongly connected component {" + members + "} has " +
                      std::to_string(size()) +
                      " vertices, above the exact-solver cap of " +
                      std::to_string(cap));
}

void SccProblem::validate() const {
  if (names.empty()) {
    throw ValidationError("subproblem has no vertices");
  }
  if (weight.size() != names.size() || has_weight.size() != names.size()) {
    throw ValidationError("subproblem weight tables have wrong shape");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= size() || v >= size() || u == v) {
      throw ValidationError("subproblem edge endpoint out of range");
    }
    if (!has_weight[u][v] || !has_weight[v][u]) {
      throw ValidationError("subproblem edge without weights for its pair");
    }
  }
}

namespace {

constexpr long long kNegInf = LLONG_MIN / 4;

// Weights brought onto one integer denominator so the subset DP runs in
// exact int64 arithmetic.
struct Scaled {
  int n = 0;
  long long denom = 1;
  std::vector<std::vector<long long>> w;
  std::vector<std::uint32_t> pred;  // pred[v]: vertices forced before v

  Rational to_rational(long long value) const { return Rational(value, denom); }
};

Scaled scale_problem(const SccProblem& problem,
                     const std::vector<std::pair<int, int>>& barred) {
  problem.validate();
  if (problem.size() > 24) {
    throw CapacityError("subset solver supports at most 24 vertices");
  }
  Scaled s;
  s.n = problem.size();
  for (int u = 0; u < s.n; ++u) {
    for (int v = 0; v < s.n; ++v) {
      if (problem.has_weight[u][v]) {
        s.denom = lcm64(s.denom, problem.weight[u][v].denominator());
      }
    }
  }
  s.w.assign(s.n, std::vector<long long>(s.n, 0));
  for (int u = 0; u < s.n; ++u) {
    for (int v = 0; v < s.n; ++v) {
      if (problem.has_weight[u][v]) {
        const Rational& r = problem.weight[u][v];
        s.w[u][v] = r.numerator() * (s.denom / r.denominator());
      }
    }
  }
  s.pred.assign(s.n, 0);
  for (const auto& [u, v] : barred) {
    const bool known = std::find(problem.edges.begin(), problem.edges.end(),
                                 std::make_pair(u, v)) != problem.edges.end();
    if (!known) {
      throw ValidationError("barred pair is not an edge of the subproblem");
    }
    s.pred[v] |= (1u << u);  // u -> v may not flip, so u precedes v
  }
  return s;
}

// f[S] = best score over arrangements of S as a prefix, kNegInf when the
// precedence constraints admit none.
std::vector<long long> subset_dp(const Scaled& s) {
  const std::size_t full = std::size_t{1} << s.n;
  std::vector<long long> f(full, kNegInf);
  f[0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    long long best = kNegInf;
    for (int v = 0; v < s.n; ++v) {
      const std::uint32_t bit = 1u << v;
      if (!(mask & bit)) continue;
      const std::uint32_t rest = static_cast<std::uint32_t>(mask) ^ bit;
      if ((s.pred[v] & ~rest) != 0) continue;  // a predecessor comes later
      if (f[rest] == kNegInf) continue;
      long long gain = 0;
      for (int u = 0; u < s.n; ++u) {
        if (rest & (1u << u)) gain += s.w[u][v];
      }
      best = std::max(best, f[rest] + gain);
    }
    f[mask] = best;
  }
  return f;
}

long long placement_gain(const Scaled& s, std::uint32_t rest, int v) {
  long long gain = 0;
  for (int u = 0; u < s.n; ++u) {
    if (rest & (1u << u)) gain += s.w[u][v];
  }
  return gain;
}

ReversalSolution finish_solution(const SccProblem& problem,
                                 std::vector<int> order, Rational score) {
  std::vector<int> pos(problem.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  ReversalSolution sol;
  sol.order = std::move(order);
  sol.score = std::move(score);
  for (const auto& edge : problem.edges) {
    if (pos[edge.second] < pos[edge.first]) sol.reversed.push_back(edge);
  }
  return sol;
}

// All optimal orders under the scaled problem; empty when infeasible.
std::vector<ReversalSolution> enumerate_scaled(const SccProblem& problem,
                                               const Scaled& s) {
  const std::vector<long long> f = subset_dp(s);
  const std::uint32_t full = (std::uint32_t{1} << s.n) - 1;
  if (f[full] == kNegInf) return {};

  std::vector<std::vector<int>> orders;
  std::vector<int> suffix;  // built back to front
  auto descend = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == 0) {
      std::vector<int> order(suffix.rbegin(), suffix.rend());
      orders.push_back(std::move(order));
      return;
    }
    for (int v = 0; v < s.n; ++v) {
      const std::uint32_t bit = 1u << v;
      if (!(mask & bit)) continue;
      const std::uint32_t rest = mask ^ bit;
      if ((s.pred[v] & ~rest) != 0) continue;
      if (f[rest] == kNegInf) continue;
      if (f[rest] + placement_gain(s, rest, v) != f[mask]) continue;
      suffix.push_back(v);
      self(self, rest);
      suffix.pop_back();
    }
  };
  descend(descend, full);
  std::sort(orders.begin(), orders.end());

  std::vector<ReversalSolution> result;
  result.reserve(orders.size());
  const Rational score = s.to_rational(f[full]);
  for (auto& order : orders) {
    result.push_back(finish_solution(problem, std::move(order), score));
  }
  return result;
}

}  // namespace

std::optional<ReversalSolution> max_weight_order(
    const SccProblem& problem, const std::vector<std::pair<int, int>>& barred) {
  const Scaled s = scale_problem(problem, barred);
  const std::vector<long long> f = subset_dp(s);
  const std::uint32_t full = (std::uint32_t{1} << s.n) - 1;
  if (f[full] == kNegInf) return std::nullopt;

  // Deterministic single pick: lowest eligible vertex at each step, walking
  // from the back of the order.
  std::vector<int> suffix;
  std::uint32_t mask = full;
  while (mask != 0) {
    bool advanced = false;
    for (int v = 0; v < s.n; ++v) {
      const std::uint32_t bit = 1u << v;
      if (!(mask & bit)) continue;
      const std::uint32_t rest = mask ^ bit;
      if ((s.pred[v] & ~rest) != 0) continue;
      if (f[rest] == kNegInf) continue;
      if (f[rest] + placement_gain(s, rest, v) != f[mask]) continue;
      suffix.push_back(v);
      mask = rest;
      advanced = true;
      break;
    }
    if (!advanced) {
      throw Error(ExitCode::invalid_input,
                  "internal: subset DP backtrack found no predecessor");
    }
  }
  std::vector<int> order(suffix.rbegin(), suffix.rend());
  return finish_solution(problem, std::move(order), s.to_rational(f[full]));
}

std::vector<ReversalSolution> enumerate_optimal(const SccProblem& problem) {
  const Scaled s = scale_problem(problem, {});
  return enumerate_scaled(problem, s);
}

std::vector<ReversalSolution> brute_force_optimal(const SccProblem& problem) {
  problem.validate();
  if (problem.size() > 8) {
    throw CapacityError("brute force is limited to 8 vertices");
  }
  const Scaled s = scale_problem(problem, {});
  std::vector<int> order(problem.size());
  for (int i = 0; i < problem.size(); ++i) order[i] = i;

  long long best = kNegInf;
  std::vector<std::vector<int>> winners;
  do {
    long long score = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        score += s.w[order[i]][order[j]];
      }
    }
    if (score > best) {
      best = score;
      winners.clear();
    }
    if (score == best) winners.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<ReversalSolution> result;
  result.reserve(winners.size());
  for (auto& w : winners) {
    result.push_back(
        finish_solution(problem, std::move(w), s.to_rational(best)));
  }
  return result;
}

namespace {

using EdgeMask = std::uint64_t;

std::vector<std::pair<int, int>> mask_to_edges(
    const SccProblem& problem, EdgeMask mask) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    if (mask & (EdgeMask{1} << e)) edges.push_back(problem.edges[e]);
  }
  return edges;
}

EdgeMask edges_to_mask(const SccProblem& problem,
                       const std::vector<std::pair<int, int>>& edges) {
  EdgeMask mask = 0;
  for (const auto& edge : edges) {
    const auto it =
        std::find(problem.edges.begin(), problem.edges.end(), edge);
    if (it == problem.edges.end()) {
      throw ValidationError("edge set refers to an unknown edge");
    }
    mask |= EdgeMask{1} << (it - problem.edges.begin());
  }
  return mask;
}

}  // namespace

std::vector<ReversalSolution> enumerate_optimal_exclusion(
    const SccProblem& problem, const ExclusionOptions& options,
    std::vector<ExclusionProbe>* trace) {
  problem.validate();
  if (problem.edges.size() > 64) {
    throw CapacityError("exclusion search supports at most 64 edges");
  }

  // Queue ordered by cardinality, then by mask value, so runs are
  // reproducible. memFail holds barred sets that scored below the incumbent
  // (any superset can only do worse); memSuccess holds already-queued sets.
  std::set<std::pair<int, EdgeMask>> queue;
  queue.insert({0, 0});
  std::vector<EdgeMask> mem_fail;
  std::unordered_set<EdgeMask> mem_success;

  bool have_incumbent = false;
  Rational best_score(0);
  std::map<std::vector<int>, ReversalSolution> found;

  const auto fails_by_memo = [&](EdgeMask mask) {
    for (const EdgeMask f : mem_fail) {
      if ((f & mask) == f) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    const auto [cardinality, barred_mask] = *queue.begin();
    (void)cardinality;
    queue.erase(queue.begin());

    const auto barred = mask_to_edges(problem, barred_mask);
    const Scaled s = scale_problem(problem, barred);
    const std::vector<ReversalSolution> solutions =
        enumerate_scaled(problem, s);

    if (solutions.empty()) {
      if (trace) trace->push_back({barred, std::nullopt, "infeasible"});
      mem_fail.push_back(barred_mask);
      if (options.prune_supersets) {
        for (auto it = queue.begin(); it != queue.end();) {
          it = ((it->second & barred_mask) == barred_mask) ? queue.erase(it)
                                                           : std::next(it);
        }
      }
      continue;
    }

    const Rational score = solutions.front().score;
    std::string verdict;
    if (!have_incumbent || score > best_score) {
      verdict = "improved";
      have_incumbent = true;
      best_score = score;
      found.clear();
      mem_success.clear();
    } else if (score == best_score) {
      verdict = "tied";
    } else {
      verdict = "worse";
    }
    if (trace) trace->push_back({barred, score, verdict});

    if (score < best_score) {
      mem_fail.push_back(barred_mask);
      if (options.prune_supersets) {
        for (auto it = queue.begin(); it != queue.end();) {
          it = ((it->second & barred_mask) == barred_mask) ? queue.erase(it)
                                                           : std::next(it);
        }
      }
      continue;
    }

    for (const ReversalSolution& solution : solutions) {
      found.emplace(solution.order, solution);
      // Queue every subset of this optimum's reversal set: barring those
      // edges keeps at least one optimum reachable, and the probes walk the
      // rest of the tied optima.
      const EdgeMask reversed_mask = edges_to_mask(problem, solution.reversed);
      EdgeMask subset = reversed_mask;
      while (true) {
        if (!mem_success.count(subset) &&
            !(options.prune_supersets && fails_by_memo(subset))) {
          mem_success.insert(subset);
          queue.insert({std::popcount(subset), subset});
        }
        if (subset == 0) break;
        subset = (subset - 1) & reversed_mask;
      }
    }
  }

  std::vector<ReversalSolution> result;
  result.reserve(found.size());
  for (auto& [order, solution] : found) {
    (void)order;
    result.push_back(std::move(solution));
  }
  return result;
}

}  // namespace lcos
