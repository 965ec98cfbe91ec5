#include "lcos/true_dag.hpp"

#include <unordered_set>

#include "lcos/errors.hpp"

namespace lcos {

void TrueDag::validate() const {
  if (vertices.empty()) {
    throw ValidationError("reference graph has no vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : vertices) {
    if (name.empty()) {
      throw ValidationError("reference graph has a vertex with an empty name");
    }
    if (!seen.insert(name).second) {
      throw ValidationError("duplicate vertex '" + name +
                            "' in reference graph");
    }
  }
  for (const auto& [from, to] : edges) {
    if (!seen.count(from) || !seen.count(to)) {
      throw ValidationError("edge (" + from + " -> " + to +
                            ") references an unknown vertex");
    }
    if (from == to) {
      throw ValidationError("self-loop on '" + from + "' in reference graph");
    }
  }
  // Kahn's algorithm; leftovers mean a cycle.
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [from, to] : edges) {
    adj[index_of(from)].push_back(index_of(to));
    ++indegree[index_of(to)];
  }
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  int removed = 0;
  while (!queue.empty()) {
    const int u = queue.back();
    queue.pop_back();
    ++removed;
    for (int v : adj[u]) {
      if (--indegree[v] == 0) queue.push_back(v);
    }
  }
  if (removed != n) {
    throw ValidationError("reference graph contains a directed cycle");
  }
}

int TrueDag::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::vector<bool>> TrueDag::descendants() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [from, to] : edges) {
    reach[index_of(from)][index_of(to)] = true;
  }
  // Floyd-Warshall style closure; n is small everywhere this runs.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

}  // namespace lcos
