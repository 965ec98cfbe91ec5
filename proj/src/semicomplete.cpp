#include "lcos/semicomplete.hpp"

#include <algorithm>

#include "lcos/errors.hpp"

namespace lcos {

SemiCompleteDigraph SemiCompleteDigraph::from_matrix(
    const ConsistencyMatrix& matrix) {
  matrix.require_complete();
  SemiCompleteDigraph g;
  for (const auto& v : matrix.variables()) g.names_.push_back(v.name);
  const int n = matrix.size();
  g.links_.assign(n, std::vector<PairLink>(n, PairLink::bidirected));
  g.weights_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.weights_[i][j] = matrix.score(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.weights_[i][j] > g.weights_[j][i]) {
        g.links_[i][j] = PairLink::forward;
      } else if (g.weights_[i][j] < g.weights_[j][i]) {
        g.links_[i][j] = PairLink::backward;
      } else {
        g.links_[i][j] = PairLink::bidirected;
      }
    }
  }
  return g;
}

int SemiCompleteDigraph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

PairLink SemiCompleteDigraph::link(int i, int j) const {
  if (i >= j) {
    throw ValidationError("pair link lookup requires i < j");
  }
  return links_.at(i).at(j);
}

bool SemiCompleteDigraph::has_arc(int from, int to) const {
  if (from == to) return false;
  if (from < to) {
    return links_.at(from).at(to) != PairLink::backward;
  }
  return links_.at(to).at(from) != PairLink::forward;
}

bool SemiCompleteDigraph::bidirected(int i, int j) const {
  if (i == j) return false;
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  return links_.at(lo).at(hi) == PairLink::bidirected;
}

Rational SemiCompleteDigraph::weight(int from, int to) const {
  if (from == to) {
    throw ValidationError("no weight on the diagonal");
  }
  return weights_.at(from).at(to);
}

std::vector<int> SemiCompleteDigraph::non_informative() const {
  std::vector<int> result;
  for (int v = 0; v < size(); ++v) {
    bool all_bidirected = true;
    for (int u = 0; u < size() && all_bidirected; ++u) {
      if (u != v && !bidirected(u, v)) all_bidirected = false;
    }
    if (all_bidirected && size() > 1) result.push_back(v);
  }
  return result;
}

SemiCompleteDigraph SemiCompleteDigraph::induced(
    const std::vector<int>& keep) const {
  for (int v : keep) {
    if (v < 0 || v >= size()) {
      throw ValidationError("induced subgraph vertex out of range");
    }
  }
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("induced subgraph vertex listed twice");
  }
  SemiCompleteDigraph g;
  const int m = static_cast<int>(sorted.size());
  for (int v : sorted) g.names_.push_back(names_[v]);
  g.links_.assign(m, std::vector<PairLink>(m, PairLink::bidirected));
  g.weights_.assign(m, std::vector<Rational>(m, Rational(0)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) g.weights_[a][b] = weights_[sorted[a]][sorted[b]];
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      g.links_[a][b] = links_[sorted[a]][sorted[b]];
    }
  }
  return g;
}

Digraph SemiCompleteDigraph::to_digraph() const {
  Digraph g(size());
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && has_arc(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

bool SemiCompleteDigraph::compatible(const AcyclicTournament& tournament) const {
  if (tournament.size() != size()) return false;
  for (const auto& name : names_) {
    if (!tournament.contains(name)) return false;
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      const PairLink link = links_[i][j];
      if (link == PairLink::bidirected) continue;  // either direction fits
      const bool i_first = tournament.before(names_[i], names_[j]);
      if (link == PairLink::forward && !i_first) return false;
      if (link == PairLink::backward && i_first) return false;
    }
  }
  return true;
}

SemiCompleteDigraph remove_vertices(const SemiCompleteDigraph& graph,
                                    const std::vector<int>& drop) {
  std::vector<bool> dropped(graph.size(), false);
  for (int v : drop) {
    if (v < 0 || v >= graph.size()) {
      throw ValidationError("vertex to remove is out of range");
    }
    dropped[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < graph.size(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return graph.induced(keep);
}

}  // namespace lcos
