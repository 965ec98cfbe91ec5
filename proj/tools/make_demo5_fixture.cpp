// Regenerates data/demo5_cache.jsonl, the recorded-oracle fixture for the
// demo5 dataset. A scripted oracle with a fixed answer plan is driven through
// the ordinary build_matrix/cache machinery (parallelism 1 for a canonical
// record order), so the fixture always matches the builder's state machine.
//
// Usage: make_demo5_fixture <dataset.json> <output.jsonl>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>

#include "lcos/builder.hpp"
#include "lcos/dataset.hpp"
#include "lcos/errors.hpp"

namespace {

// Target numerators over 10 repeats, row = source, column = target.
// Designed so the pipeline removes E (tied with everything), finds the
// 3-cycle A->B->C->A plus downstream D, and leaves {C, D} tied.
constexpr int kPlan[5][5] = {
    {-1, 8, 3, 8, 5},
    {2, -1, 7, 6, 5},
    {6, 1, -1, 5, 5},
    {1, 2, 5, -1, 5},
    {5, 5, 5, 5, -1},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: make_demo5_fixture <dataset.json> <output.jsonl>\n";
    return 2;
  }
  try {
    const lcos::Dataset dataset = lcos::load_dataset(argv[1]);
    if (dataset.variables.size() != 5) {
      throw lcos::ValidationError("expected the 5-variable demo dataset");
    }
    const lcos::PromptTemplate tmpl = lcos::PromptTemplate::defaults();

    // The responder recovers (source, target, verb) from the rendered prompt
    // via the unique descriptions, then follows the plan: verb k answers true
    // iff k < numerator. A few slots stutter first to exercise the retry
    // logic; one slot never parses so the count_false fallback is on record.
    std::map<std::string, int> attempt_counter;
    auto respond = [&](const std::string& prompt) -> std::string {
      std::vector<std::pair<std::size_t, int>> hits;
      for (int v = 0; v < 5; ++v) {
        const auto pos = prompt.find(dataset.variables[v].description);
        if (pos != std::string::npos) hits.emplace_back(pos, v);
      }
      std::sort(hits.begin(), hits.end());
      const int source = hits.size() == 2 ? hits[0].second : -1;
      const int target = hits.size() == 2 ? hits[1].second : -1;
      int verb = -1;
      for (std::size_t k = 0; k < tmpl.verbs.size(); ++k) {
        if (prompt.find(" " + tmpl.verbs[k] + " ") != std::string::npos) {
          verb = static_cast<int>(k);
          break;
        }
      }
      if (source < 0 || target < 0 || verb < 0) {
        throw lcos::ValidationError("responder could not decode the prompt");
      }
      const std::string key = std::to_string(source) + "," +
                              std::to_string(target) + "," +
                              std::to_string(verb);
      const int attempt = attempt_counter[key]++;
      const bool answer = verb < kPlan[source][target];

      // (A -> B, "cause"): one garbled reply, then the real one.
      if (source == 0 && target == 1 && verb == 0 && attempt == 0) {
        return "It depends on the season, really.";
      }
      // (D -> A, "impact"): two garbled replies.
      if (source == 3 && target == 0 && verb == 5 && attempt < 2) {
        return attempt == 0 ? "no idea" : "Certainly not something I can say.";
      }
      // (E -> A, "determine"): never parses; the builder counts it false,
      // which matches the planned numerator anyway.
      if (source == 4 && target == 0 && verb == 9) {
        return "42";
      }
      return answer ? "True." : "False.";
    };

    lcos::ScriptedOracle oracle("fixture-v1", respond);
    const std::filesystem::path out = argv[2];
    std::filesystem::remove(out);
    lcos::ResponseCache cache = lcos::ResponseCache::open(
        out, dataset.name, oracle.id(), tmpl.stable_hash());

    lcos::BuildOptions options;
    options.dataset_id = dataset.name;
    options.repeats = 10;
    options.retry_limit = 3;
    options.parallelism = 1;
    const lcos::ConsistencyMatrix matrix =
        lcos::build_matrix(dataset.variables, tmpl, &oracle, cache, options);

    for (int i = 0; i < matrix.size(); ++i) {
      for (int j = 0; j < matrix.size(); ++j) {
        if (i != j && matrix.numerator(i, j) != kPlan[i][j]) {
          throw lcos::ValidationError("fixture did not reproduce the plan");
        }
      }
    }
    std::cout << "wrote " << cache.size() << " records to " << out.string()
              << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
