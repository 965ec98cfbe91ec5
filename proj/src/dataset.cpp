#include "lcos/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lcos/errors.hpp"

namespace lcos {

void Dataset::validate() const {
  if (name.empty()) {
    throw ValidationError("dataset has no name");
  }
  validate_variables(variables);
  if (true_edges.has_value()) {
    true_dag().validate();
  }
}

TrueDag Dataset::true_dag() const {
  if (!true_edges.has_value()) {
    throw ValidationError("dataset '" + name + "' has no reference edges");
  }
  TrueDag dag;
  for (const auto& v : variables) dag.vertices.push_back(v.name);
  dag.edges = *true_edges;
  return dag;
}

nlohmann::ordered_json Dataset::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["variables"] = nlohmann::ordered_json::array();
  for (const auto& v : variables) {
    j["variables"].push_back({{"name", v.name}, {"description", v.description}});
  }
  if (true_edges.has_value()) {
    j["true_edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : *true_edges) {
      j["true_edges"].push_back({from, to});
    }
  }
  return j;
}

Dataset Dataset::from_json(const nlohmann::json& j) {
  try {
    Dataset d;
    d.name = j.at("name").get<std::string>();
    for (const auto& v : j.at("variables")) {
      d.variables.push_back({v.at("name").get<std::string>(),
                             v.value("description", std::string{})});
    }
    if (j.contains("true_edges")) {
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& e : j.at("true_edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw ValidationError("true_edges entries must be [from, to] pairs");
        }
        edges.emplace_back(e.at(0).get<std::string>(),
                           e.at(1).get<std::string>());
      }
      d.true_edges = std::move(edges);
    }
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed dataset JSON: ") + e.what());
  }
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot read dataset file " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("dataset file " + path + ": " + e.what());
  }
  return Dataset::from_json(j);
}

Dataset dataset_from_edge_list(const std::string& text,
                               const std::string& name) {
  Dataset d;
  d.name = name;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> order;  // vertex first-appearance order

  const auto note_vertex = [&](const std::string& v) {
    if (std::find(order.begin(), order.end(), v) == order.end()) {
      order.push_back(v);
    }
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string from, mid, to;
    if (!(fields >> from)) continue;  // blank line
    if (!(fields >> mid)) {
      throw ValidationError("edge list line " + std::to_string(line_no) +
                            ": expected two vertex names");
    }
    if (mid == "->") {
      if (!(fields >> to)) {
        throw ValidationError("edge list line " + std::to_string(line_no) +
                              ": missing target after '->'");
      }
    } else {
      to = mid;
    }
    std::string extra;
    if (fields >> extra) {
      throw ValidationError("edge list line " + std::to_string(line_no) +
                            ": unexpected trailing token '" + extra + "'");
    }
    note_vertex(from);
    note_vertex(to);
    edges.emplace_back(from, to);
  }
  for (const auto& v : order) d.variables.push_back({v, v});
  d.true_edges = std::move(edges);
  d.validate();
  return d;
}

}  // namespace lcos
