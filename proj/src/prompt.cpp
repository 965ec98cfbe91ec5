#include "lcos/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "lcos/errors.hpp"

namespace lcos {

namespace {

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

std::vector<std::string> default_verbs() {
  return {"cause",  "provoke", "affect",  "influence", "lead to",
          "impact", "drive",   "induce",  "trigger",   "determine"};
}

PromptTemplate PromptTemplate::defaults() {
  return PromptTemplate{
      "Consider two variables: \"{source}\" and \"{target}\"; "
      "Does the first {verb} the second?",
      default_verbs(),
      "Reply only with a true or a false",
  };
}

void PromptTemplate::validate() const {
  for (const char* placeholder : {"{source}", "{target}", "{verb}"}) {
    if (count_occurrences(preamble, placeholder) != 1) {
      throw ValidationError(std::string("prompt preamble must contain ") +
                            placeholder + " exactly once");
    }
  }
  if (verbs.empty()) {
    throw ValidationError("prompt template has no verbs");
  }
  std::unordered_set<std::string> seen;
  for (const auto& verb : verbs) {
    if (verb.empty()) {
      throw ValidationError("prompt template has an empty verb");
    }
    if (!seen.insert(verb).second) {
      throw ValidationError("duplicate verb '" + verb + "'");
    }
  }
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string PromptTemplate::stable_hash() const {
  // Unit separators keep field boundaries unambiguous.
  std::string canonical = preamble;
  canonical += '\x1f';
  for (const auto& verb : verbs) {
    canonical += verb;
    canonical += '\x1e';
  }
  canonical += '\x1f';
  canonical += answer_instruction;
  std::ostringstream out;
  out << std::hex << fnv1a64(canonical);
  return out.str();
}

std::string render_prompt(const PromptTemplate& tmpl, const VariableSpec& source,
                          const VariableSpec& target, std::size_t verb_index) {
  tmpl.validate();
  if (verb_index >= tmpl.verbs.size()) {
    throw ValidationError("verb index out of range");
  }
  // Locate all placeholders in the pristine template, then substitute from the
  // rightmost one so interpolated values are never re-scanned.
  std::string text = tmpl.preamble;
  struct Slot {
    std::size_t pos;
    std::size_t len;
    const std::string* value;
  };
  const std::string& verb = tmpl.verbs[verb_index];
  std::vector<Slot> slots = {
      {text.find("{source}"), 8, &source.description},
      {text.find("{target}"), 8, &target.description},
      {text.find("{verb}"), 6, &verb},
  };
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.pos > b.pos; });
  for (const Slot& slot : slots) {
    text.replace(slot.pos, slot.len, *slot.value);
  }
  return text + " " + tmpl.answer_instruction;
}

std::optional<bool> parse_answer(const std::string& raw) {
  std::size_t i = 0;
  while (i < raw.size() && !std::isalpha(static_cast<unsigned char>(raw[i]))) {
    ++i;
  }
  std::string token;
  while (i < raw.size() && std::isalpha(static_cast<unsigned char>(raw[i]))) {
    token += static_cast<char>(
        std::tolower(static_cast<unsigned char>(raw[i])));
    ++i;
  }
  if (token == "true") return true;
  if (token == "false") return false;
  return std::nullopt;
}

}  // namespace lcos
