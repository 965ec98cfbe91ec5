#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcos/variable.hpp"

namespace lcos {

// The yes/no question posed to the oracle for an ordered variable pair.
// `preamble` must contain "{source}", "{target}" and "{verb}" exactly once
// each; the rendered prompt is preamble + " " + answer_instruction.
struct PromptTemplate {
  std::string preamble;
  std::vector<std::string> verbs;
  std::string answer_instruction;

  static PromptTemplate defaults();

  // Throws ValidationError on missing placeholders, empty or duplicate verbs.
  void validate() const;

  // Stable across processes; part of the response-cache key so cached answers
  // are never replayed against a different wording.
  std::string stable_hash() const;

  bool operator==(const PromptTemplate&) const = default;
};

std::vector<std::string> default_verbs();

std::string render_prompt(const PromptTemplate& tmpl, const VariableSpec& source,
                          const VariableSpec& target, std::size_t verb_index);

// First alphabetic token of the response, case-insensitively matched against
// "true"/"false". nullopt = parse failure.
std::optional<bool> parse_answer(const std::string& raw);

// FNV-1a, used for template hashing and anywhere a stable digest is needed.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace lcos
