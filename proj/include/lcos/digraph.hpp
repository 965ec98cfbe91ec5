#pragma once

#include <utility>
#include <vector>

namespace lcos {

// Plain directed graph over integer vertices; duplicate arcs are ignored.
class Digraph {
 public:
  explicit Digraph(int n);

  int size() const { return static_cast<int>(successors_.size()); }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  const std::vector<int>& successors(int from) const;
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const { return edge_count_; }

  bool reachable(int from, int to) const;

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<std::vector<int>> successors_;
  std::vector<std::vector<bool>> adjacency_;
  int edge_count_ = 0;
};

// Strongly connected components, listed in topological order of the
// condensation (sources first). component_of[v] indexes into components.
struct SccPartition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
};

SccPartition scc_decompose(const Digraph& graph);

// Condensation: one vertex per component, deduplicated arcs between distinct
// components. Always acyclic.
Digraph condense(const Digraph& graph, const SccPartition& partition);

// All topological orders of an acyclic digraph, each as a vertex sequence,
// in lexicographic order. Throws ValidationError on cyclic input.
std::vector<std::vector<int>> topological_orders(const Digraph& graph);

}  // namespace lcos
