#include "lcos/dot.hpp"

#include <sstream>

#include "lcos/errors.hpp"

namespace lcos {

namespace {

std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const SemiCompleteDigraph& graph) {
  std::ostringstream out;
  out << "digraph consistency {\n";
  for (int v = 0; v < graph.size(); ++v) {
    out << "  " << quoted(graph.name(v)) << ";\n";
  }
  for (int i = 0; i < graph.size(); ++i) {
    for (int j = i + 1; j < graph.size(); ++j) {
      switch (graph.link(i, j)) {
        case PairLink::forward:
          out << "  " << quoted(graph.name(i)) << " -> "
              << quoted(graph.name(j)) << ";\n";
          break;
        case PairLink::backward:
          out << "  " << quoted(graph.name(j)) << " -> "
              << quoted(graph.name(i)) << ";\n";
          break;
        case PairLink::bidirected:
          out << "  " << quoted(graph.name(i)) << " -> "
              << quoted(graph.name(j)) << " [dir=both];\n";
          break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& graph,
                   const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != graph.size()) {
    throw ValidationError("one name per vertex is required");
  }
  std::ostringstream out;
  out << "digraph g {\n";
  for (int v = 0; v < graph.size(); ++v) {
    out << "  " << quoted(names[v]) << ";\n";
  }
  for (const auto& [u, v] : graph.edges()) {
    out << "  " << quoted(names[u]) << " -> " << quoted(names[v]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const AcyclicTournament& tournament) {
  std::ostringstream out;
  out << "digraph order {\n";
  out << "  rankdir=LR;\n";
  for (const auto& name : tournament.order) {
    out << "  " << quoted(name) << ";\n";
  }
  for (std::size_t i = 0; i + 1 < tournament.order.size(); ++i) {
    out << "  " << quoted(tournament.order[i]) << " -> "
        << quoted(tournament.order[i + 1]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lcos
