#include "lcos/digraph.hpp"

#include <algorithm>

#include "lcos/errors.hpp"

namespace lcos {

Digraph::Digraph(int n) {
  if (n < 0) {
    throw ValidationError("digraph size must be >= 0");
  }
  successors_.resize(n);
  adjacency_.assign(n, std::vector<bool>(n, false));
}

void Digraph::add_edge(int from, int to) {
  if (from < 0 || from >= size() || to < 0 || to >= size()) {
    throw ValidationError("edge endpoint out of range");
  }
  if (from == to) {
    throw ValidationError("self-loops are not allowed");
  }
  if (adjacency_[from][to]) return;
  adjacency_[from][to] = true;
  successors_[from].push_back(to);
  ++edge_count_;
}

bool Digraph::has_edge(int from, int to) const {
  return adjacency_.at(from).at(to);
}

const std::vector<int>& Digraph::successors(int from) const {
  return successors_.at(from);
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count_);
  for (int u = 0; u < size(); ++u) {
    for (int v : successors_[u]) result.emplace_back(u, v);
  }
  return result;
}

bool Digraph::reachable(int from, int to) const {
  if (from == to) return true;
  std::vector<bool> visited(size(), false);
  std::vector<int> stack = {from};
  visited[from] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : successors_[u]) {
      if (v == to) return true;
      if (!visited[v]) {
        visited[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

namespace {

// Iterative Tarjan; emits components with all successors already emitted,
// i.e. in reverse topological order of the condensation.
struct TarjanState {
  const Digraph& graph;
  std::vector<int> index, lowlink;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  explicit TarjanState(const Digraph& g)
      : graph(g),
        index(g.size(), -1),
        lowlink(g.size(), 0),
        on_stack(g.size(), false) {}

  void run(int root) {
    // Explicit call stack of (vertex, next successor position).
    std::vector<std::pair<int, std::size_t>> frames = {{root, 0}};
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      const auto& succ = graph.successors(v);
      while (pos < succ.size()) {
        const int w = succ[pos++];
        if (index[w] == -1) {
          frames.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        std::vector<int> component;
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
          if (w == v) break;
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
};

}  // namespace

SccPartition scc_decompose(const Digraph& graph) {
  TarjanState state(graph);
  for (int v = 0; v < graph.size(); ++v) {
    if (state.index[v] == -1) state.run(v);
  }
  // Reverse so components come out sources-first.
  std::reverse(state.components.begin(), state.components.end());
  SccPartition partition;
  partition.components = std::move(state.components);
  partition.component_of.assign(graph.size(), -1);
  for (std::size_t c = 0; c < partition.components.size(); ++c) {
    for (int v : partition.components[c]) {
      partition.component_of[v] = static_cast<int>(c);
    }
  }
  return partition;
}

Digraph condense(const Digraph& graph, const SccPartition& partition) {
  Digraph result(static_cast<int>(partition.components.size()));
  for (const auto& [u, v] : graph.edges()) {
    const int cu = partition.component_of[u];
    const int cv = partition.component_of[v];
    if (cu != cv) result.add_edge(cu, cv);
  }
  return result;
}

namespace {

void collect_orders(const Digraph& graph, std::vector<int>& indegree,
                    std::vector<bool>& used, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (prefix.size() == static_cast<std::size_t>(graph.size())) {
    out.push_back(prefix);
    return;
  }
  for (int v = 0; v < graph.size(); ++v) {
    if (used[v] || indegree[v] != 0) continue;
    used[v] = true;
    prefix.push_back(v);
    for (int w : graph.successors(v)) --indegree[w];
    collect_orders(graph, indegree, used, prefix, out);
    for (int w : graph.successors(v)) ++indegree[w];
    prefix.pop_back();
    used[v] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> topological_orders(const Digraph& graph) {
  std::vector<int> indegree(graph.size(), 0);
  for (const auto& [u, v] : graph.edges()) {
    (void)u;
    ++indegree[v];
  }
  std::vector<bool> used(graph.size(), false);
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;
  collect_orders(graph, indegree, used, prefix, out);
  if (out.empty() && graph.size() > 0) {
    throw ValidationError("graph is cyclic; it has no topological order");
  }
  return out;
}

}  // namespace lcos
