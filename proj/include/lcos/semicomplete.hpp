#pragma once

#include <string>
#include <vector>

#include "lcos/digraph.hpp"
#include "lcos/matrix.hpp"
#include "lcos/order.hpp"
#include "lcos/rational.hpp"

namespace lcos {

// How an unordered pair {i, j} (i < j) is connected. A semi-complete digraph
// has at least one arc between every pair, so "no edge" does not occur.
enum class PairLink {
  forward,     // i -> j only
  backward,    // j -> i only
  bidirected,  // both arcs
};

// The maximally consistent semi-complete digraph for a consistency matrix:
// arc i -> j iff C(i -> j) >= C(j -> i), hence both arcs on ties. Keeps the
// scores so downstream stages can weigh orientations.
class SemiCompleteDigraph {
 public:
  static SemiCompleteDigraph from_matrix(const ConsistencyMatrix& matrix);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index_of(const std::string& name) const;

  PairLink link(int i, int j) const;  // requires i < j
  bool has_arc(int from, int to) const;
  bool bidirected(int i, int j) const;
  Rational weight(int from, int to) const;  // C(from -> to)

  // Vertices whose every pair is bidirected; they say nothing about order.
  std::vector<int> non_informative() const;

  // Subgraph on the kept vertices (ascending original index order).
  SemiCompleteDigraph induced(const std::vector<int>& keep) const;

  // Both arcs of every bidirected pair materialized.
  Digraph to_digraph() const;

  // True iff the tournament covers exactly this vertex set and every one-way
  // pair of the digraph agrees with the tournament's order.
  bool compatible(const AcyclicTournament& tournament) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<PairLink>> links_;     // valid above the diagonal
  std::vector<std::vector<Rational>> weights_;   // full matrix of C values
};

// Convenience wrapper: drop the listed vertices, validating them first.
SemiCompleteDigraph remove_vertices(const SemiCompleteDigraph& graph,
                                    const std::vector<int>& drop);

}  // namespace lcos
