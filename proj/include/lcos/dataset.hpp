#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcos/true_dag.hpp"
#include "lcos/variable.hpp"

namespace lcos {

// Input bundle for a run: the variables to order and, when known, the
// reference edges to score against.
struct Dataset {
  std::string name;
  std::vector<VariableSpec> variables;
  std::optional<std::vector<std::pair<std::string, std::string>>> true_edges;

  void validate() const;

  // Throws ValidationError when the dataset carries no reference edges.
  TrueDag true_dag() const;

  nlohmann::ordered_json to_json() const;
  static Dataset from_json(const nlohmann::json& j);
};

Dataset load_dataset(const std::string& path);

// Plain edge-list text ("A B" or "A -> B" per line, '#' comments) turned
// into a dataset. Descriptions default to the names.
Dataset dataset_from_edge_list(const std::string& text, const std::string& name);

}  // namespace lcos
