#include "lcos/builder.hpp"

#include <atomic>
#include <ctime>
#include <exception>
#include <thread>

#include "lcos/errors.hpp"

namespace lcos {

namespace {

struct PairTask {
  int source;
  int target;
};

class PairWorker {
 public:
  PairWorker(const std::vector<VariableSpec>& variables,
             const PromptTemplate& tmpl, Oracle* oracle, ResponseCache& cache,
             const BuildOptions& options)
      : variables_(variables),
        tmpl_(tmpl),
        oracle_(oracle),
        cache_(cache),
        options_(options) {}

  // Number of affirmative repetitions for the ordered pair.
  int run(const PairTask& task) const {
    const VariableSpec& source = variables_[task.source];
    const VariableSpec& target = variables_[task.target];
    int affirmative = 0;
    // Repetition k starts on verb k; the next_verb policy hands out verbs
    // beyond `repeats` that no repetition has claimed yet.
    std::size_t next_fresh = static_cast<std::size_t>(options_.repeats);
    for (int rep = 0; rep < options_.repeats; ++rep) {
      std::size_t verb_index = static_cast<std::size_t>(rep);
      std::optional<bool> outcome;
      while (true) {
        outcome = resolve_slot(source, target, verb_index);
        if (outcome.has_value()) break;
        if (options_.on_parse_failure == ParseFailurePolicy::next_verb &&
            next_fresh < tmpl_.verbs.size()) {
          verb_index = next_fresh++;
          continue;
        }
        break;  // count_false, or no fresh verbs left
      }
      if (outcome.value_or(false)) ++affirmative;
    }
    return affirmative;
  }

 private:
  // Replays cached attempts for (source, target, verb) and issues live
  // queries for the remainder. nullopt = every allowed attempt parse-failed.
  std::optional<bool> resolve_slot(const VariableSpec& source,
                                   const VariableSpec& target,
                                   std::size_t verb_index) const {
    const std::string& verb = tmpl_.verbs[verb_index];
    const std::vector<QueryRecord> cached =
        cache_.find(source.name, target.name, verb);
    const int max_attempts = options_.retry_limit + 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      std::optional<bool> parsed;
      if (attempt < static_cast<int>(cached.size())) {
        const QueryRecord& record = cached[attempt];
        if (record.attempt != attempt) {
          throw ValidationError("cache attempts out of sequence for (" +
                                source.name + " -> " + target.name +
                                ", verb '" + verb + "')");
        }
        parsed = record.parsed;
      } else {
        if (!options_.allow_queries) {
          throw IncompleteMatrixError(
              "replay cache has no record for (" + source.name + " -> " +
              target.name + ", verb '" + verb + "', attempt " +
              std::to_string(attempt) + ")");
        }
        QueryRecord record;
        record.dataset_id = options_.dataset_id;
        record.model_id = oracle_->id();
        record.template_hash = tmpl_.stable_hash();
        record.source = source.name;
        record.target = target.name;
        record.verb = verb;
        record.attempt = attempt;
        record.raw_response =
            oracle_->complete(render_prompt(tmpl_, source, target, verb_index));
        record.parsed = parse_answer(record.raw_response);
        record.timestamp = static_cast<std::int64_t>(std::time(nullptr));
        parsed = record.parsed;
        cache_.append(record);
      }
      if (parsed.has_value()) return parsed;
    }
    return std::nullopt;
  }

  const std::vector<VariableSpec>& variables_;
  const PromptTemplate& tmpl_;
  Oracle* oracle_;
  ResponseCache& cache_;
  const BuildOptions& options_;
};

}  // namespace

ConsistencyMatrix build_matrix(const std::vector<VariableSpec>& variables,
                               const PromptTemplate& tmpl, Oracle* oracle,
                               ResponseCache& cache,
                               const BuildOptions& options) {
  validate_variables(variables);
  tmpl.validate();
  if (options.allow_queries) {
    require_descriptions(variables);
    if (oracle == nullptr) {
      throw ValidationError("build_matrix needs an oracle unless replaying");
    }
  }
  if (options.repeats < 1) {
    throw ValidationError("repeats must be >= 1");
  }
  if (static_cast<std::size_t>(options.repeats) > tmpl.verbs.size()) {
    throw ValidationError(
        "repeats (" + std::to_string(options.repeats) +
        ") exceeds the number of verbs (" + std::to_string(tmpl.verbs.size()) +
        "); each repetition needs its own verb");
  }
  if (options.retry_limit < 0) {
    throw ValidationError("retry_limit must be >= 0");
  }

  std::vector<PairTask> tasks;
  const int n = static_cast<int>(variables.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) tasks.push_back({i, j});
    }
  }

  const PairWorker worker(variables, tmpl, oracle, cache, options);
  std::vector<int> results(tasks.size(), -1);
  std::vector<std::exception_ptr> failures(tasks.size());

  const int thread_count = std::max(
      1, std::min(options.parallelism, static_cast<int>(tasks.size())));
  if (thread_count == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      results[t] = worker.run(tasks[t]);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    auto loop = [&] {
      while (true) {
        const std::size_t t = cursor.fetch_add(1);
        if (t >= tasks.size()) return;
        try {
          results[t] = worker.run(tasks[t]);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int k = 0; k < thread_count; ++k) threads.emplace_back(loop);
    for (auto& th : threads) th.join();
    // Surface the failure for the earliest pair so reruns behave the same.
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  ConsistencyMatrix matrix(variables, options.repeats);
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    matrix.set_numerator(tasks[t].source, tasks[t].target, results[t]);
  }
  return matrix;
}

}  // namespace lcos
