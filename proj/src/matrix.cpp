#include "lcos/matrix.hpp"

#include <sstream>

#include "lcos/errors.hpp"

namespace lcos {

ConsistencyMatrix::ConsistencyMatrix(std::vector<VariableSpec> variables,
                                     int repeats)
    : variables_(std::move(variables)), repeats_(repeats) {
  validate_variables(variables_);
  if (repeats_ < 1) {
    throw ValidationError("repeats must be >= 1");
  }
  cells_.assign(variables_.size(), std::vector<int>(variables_.size(), -1));
}

int ConsistencyMatrix::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return -1;
}

bool ConsistencyMatrix::populated(int i, int j) const {
  return cells_.at(i).at(j) >= 0;
}

bool ConsistencyMatrix::complete() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && !populated(i, j)) return false;
    }
  }
  return true;
}

void ConsistencyMatrix::require_complete() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && !populated(i, j)) {
        throw IncompleteMatrixError("consistency matrix has no score for (" +
                                    variables_[i].name + " -> " +
                                    variables_[j].name + ")");
      }
    }
  }
}

int ConsistencyMatrix::numerator(int i, int j) const {
  if (i == j) {
    throw ValidationError("diagonal cells of the consistency matrix are undefined");
  }
  const int m = cells_.at(i).at(j);
  if (m < 0) {
    throw IncompleteMatrixError("consistency matrix has no score for (" +
                                variables_[i].name + " -> " +
                                variables_[j].name + ")");
  }
  return m;
}

void ConsistencyMatrix::set_numerator(int i, int j, int m) {
  if (i == j) {
    throw ValidationError("cannot assign a diagonal cell");
  }
  if (m < 0 || m > repeats_) {
    throw ValidationError("numerator " + std::to_string(m) +
                          " outside [0, repeats]");
  }
  cells_.at(i).at(j) = m;
}

Rational ConsistencyMatrix::score(int i, int j) const {
  return Rational(numerator(i, j), repeats_);
}

nlohmann::ordered_json ConsistencyMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["variables"] = nlohmann::ordered_json::array();
  for (const auto& v : variables_) {
    j["variables"].push_back({{"name", v.name}, {"description", v.description}});
  }
  j["repeats"] = repeats_;
  j["scores"] = cells_;
  return j;
}

ConsistencyMatrix ConsistencyMatrix::from_json(const nlohmann::json& j) {
  try {
    std::vector<VariableSpec> vars;
    for (const auto& v : j.at("variables")) {
      vars.push_back({v.at("name").get<std::string>(),
                      v.value("description", std::string{})});
    }
    const int repeats = j.at("repeats").get<int>();
    ConsistencyMatrix m(std::move(vars), repeats);
    const auto& scores = j.at("scores");
    if (static_cast<int>(scores.size()) != m.size()) {
      throw ValidationError("scores row count does not match variable count");
    }
    for (int i = 0; i < m.size(); ++i) {
      const auto& row = scores.at(i);
      if (static_cast<int>(row.size()) != m.size()) {
        throw ValidationError("scores row " + std::to_string(i) +
                              " has wrong length");
      }
      for (int k = 0; k < m.size(); ++k) {
        const int cell = row.at(k).get<int>();
        if (i == k) {
          if (cell != -1) {
            throw ValidationError("diagonal cells must be -1");
          }
          continue;
        }
        if (cell >= 0) m.set_numerator(i, k, cell);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string ConsistencyMatrix::to_csv() const {
  std::ostringstream out;
  out << "source";
  for (const auto& v : variables_) out << ',' << v.name;
  out << '\n';
  for (int i = 0; i < size(); ++i) {
    out << variables_[i].name;
    for (int j = 0; j < size(); ++j) {
      out << ',';
      if (i == j || !populated(i, j)) continue;
      out << to_decimal_string(score(i, j));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

ConsistencyMatrix ConsistencyMatrix::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.size() < 2) {
    throw ValidationError("CSV matrix needs a header and at least one row");
  }
  const std::size_t n = rows.size() - 1;
  if (rows[0].size() != n + 1) {
    throw ValidationError("CSV header length does not match row count");
  }
  std::vector<VariableSpec> vars;
  for (std::size_t j = 1; j <= n; ++j) vars.push_back({rows[0][j], ""});

  // Parse every off-diagonal cell, then bring them onto one denominator.
  std::vector<std::vector<Rational>> parsed(n, std::vector<Rational>(n, Rational(0)));
  std::int64_t denom = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) {
      throw ValidationError("CSV row " + std::to_string(i + 1) +
                            " has wrong length");
    }
    if (row[0] != vars[i].name) {
      throw ValidationError("CSV row label '" + row[0] +
                            "' does not match header order");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string& cell = row[j + 1];
      if (cell.empty()) {
        throw ValidationError("CSV matrix has an empty cell at (" +
                              vars[i].name + ", " + vars[j].name + ")");
      }
      parsed[i][j] = parse_fraction(cell);
      if (parsed[i][j] < Rational(0) || parsed[i][j] > Rational(1)) {
        throw ValidationError("CSV cell out of [0,1] at (" + vars[i].name +
                              ", " + vars[j].name + ")");
      }
      denom = lcm64(denom, parsed[i][j].denominator());
    }
  }
  if (denom > 1'000'000'000) {
    throw ValidationError("CSV cell denominators are too large to combine");
  }
  ConsistencyMatrix m(std::move(vars), static_cast<int>(denom));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational scaled = parsed[i][j] * Rational(denom);
      m.set_numerator(static_cast<int>(i), static_cast<int>(j),
                      static_cast<int>(scaled.numerator()));
    }
  }
  return m;
}

bool ConsistencyMatrix::operator==(const ConsistencyMatrix& other) const {
  return variables_ == other.variables_ && repeats_ == other.repeats_ &&
         cells_ == other.cells_;
}

}  // namespace lcos
