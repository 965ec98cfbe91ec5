#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lcos/rational.hpp"
#include "lcos/variable.hpp"

namespace lcos {

// Square matrix of pairwise consistency scores C(i -> j) = m/n where m is the
// number of affirmative answers out of n repeats. Cells are stored as integer
// numerators over the shared denominator `repeats`; the diagonal and cells not
// yet filled in are unpopulated.
class ConsistencyMatrix {
 public:
  ConsistencyMatrix(std::vector<VariableSpec> variables, int repeats);

  int size() const { return static_cast<int>(variables_.size()); }
  int repeats() const { return repeats_; }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const VariableSpec& variable(int i) const { return variables_.at(i); }

  // -1 if no variable has that name.
  int index_of(const std::string& name) const;

  bool populated(int i, int j) const;
  bool complete() const;
  // Throws IncompleteMatrixError naming the first missing ordered pair.
  void require_complete() const;

  // Numerator m of C(i -> j); throws if unpopulated or i == j.
  int numerator(int i, int j) const;
  void set_numerator(int i, int j, int m);

  Rational score(int i, int j) const;

  nlohmann::ordered_json to_json() const;
  static ConsistencyMatrix from_json(const nlohmann::json& j);

  // Header row/column of names; cells as exact decimals where possible.
  std::string to_csv() const;
  // Reconstructs exact numerators over the least common denominator of all
  // cells. Descriptions are left empty (CSV does not carry them).
  static ConsistencyMatrix from_csv(const std::string& text);

  bool operator==(const ConsistencyMatrix& other) const;

 private:
  std::vector<VariableSpec> variables_;
  int repeats_;
  std::vector<std::vector<int>> cells_;  // -1 = unpopulated
};

}  // namespace lcos
