#pragma once

#include <string>
#include <vector>

#include "lcos/digraph.hpp"
#include "lcos/order.hpp"
#include "lcos/semicomplete.hpp"

namespace lcos {

// Graphviz exports. Bidirected pairs render as a single undirected-looking
// edge (dir=both) so ties stand out.
std::string to_dot(const SemiCompleteDigraph& graph);

// Generic digraph with caller-supplied vertex labels.
std::string to_dot(const Digraph& graph, const std::vector<std::string>& names);

// A total order as a chain u0 -> u1 -> ... (transitive arcs omitted).
std::string to_dot(const AcyclicTournament& tournament);

}  // namespace lcos
