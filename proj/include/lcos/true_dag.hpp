#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lcos {

// Reference causal structure used for synthetic answer generation and for
// scoring recovered orders. Edges are (cause, effect) name pairs.
struct TrueDag {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  // Unique non-empty names, known endpoints, no directed cycle; throws
  // ValidationError otherwise.
  void validate() const;

  int index_of(const std::string& name) const;

  // reach[i][j] == true iff there is a directed path of length >= 1 from i
  // to j, i.e. j is a proper descendant of i.
  std::vector<std::vector<bool>> descendants() const;
};

}  // namespace lcos
