#include "lcos/variable.hpp"

#include <unordered_set>

#include "lcos/errors.hpp"

namespace lcos {

void validate_variables(const std::vector<VariableSpec>& variables) {
  if (variables.empty()) {
    throw ValidationError("variable list is empty");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.name.empty()) {
      throw ValidationError("variable with empty name");
    }
    if (!seen.insert(v.name).second) {
      throw ValidationError("duplicate variable name '" + v.name + "'");
    }
  }
}

void require_descriptions(const std::vector<VariableSpec>& variables) {
  for (const auto& v : variables) {
    if (v.description.empty()) {
      throw ValidationError("variable '" + v.name +
                            "' has no description; prompts cannot be rendered");
    }
  }
}

}  // namespace lcos
