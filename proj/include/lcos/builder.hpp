#pragma once

#include <string>
#include <vector>

#include "lcos/matrix.hpp"
#include "lcos/oracle.hpp"
#include "lcos/prompt.hpp"
#include "lcos/query_cache.hpp"
#include "lcos/variable.hpp"

namespace lcos {

// What to do when retry_limit consecutive parse failures exhaust a
// (pair, verb) slot.
enum class ParseFailurePolicy {
  count_false,  // score the repetition as "false" (default)
  next_verb,    // burn the verb, move to the next unused one
};

struct BuildOptions {
  std::string dataset_id;
  int repeats = 10;
  int retry_limit = 3;
  ParseFailurePolicy on_parse_failure = ParseFailurePolicy::count_false;
  int parallelism = 1;
  // When false no oracle calls are made; every answer must come from the
  // cache or the build fails naming the missing slot (replay mode).
  bool allow_queries = true;
};

// Fills C(i -> j) for every ordered pair. Repetition k uses verb k, so
// repeats must not exceed the verb count. Cached records are replayed through
// the same state machine before any live query is issued, which makes an
// interrupted run resumable and a recorded run replayable bit-for-bit.
//
// `oracle` may be null only when options.allow_queries is false.
ConsistencyMatrix build_matrix(const std::vector<VariableSpec>& variables,
                               const PromptTemplate& tmpl, Oracle* oracle,
                               ResponseCache& cache,
                               const BuildOptions& options);

}  // namespace lcos
