#pragma once

#include <string>
#include <vector>

namespace lcos {

// A variable as presented to the oracle. The name is the vertex identity
// throughout the pipeline; the description is what prompts interpolate.
struct VariableSpec {
  std::string name;
  std::string description;

  bool operator==(const VariableSpec&) const = default;
};

// Throws ValidationError on empty or duplicate names.
void validate_variables(const std::vector<VariableSpec>& variables);

// Throws ValidationError if any description is empty (live runs interpolate
// descriptions into prompts, so they must be present).
void require_descriptions(const std::vector<VariableSpec>& variables);

}  // namespace lcos
