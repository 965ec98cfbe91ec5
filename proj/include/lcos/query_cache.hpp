#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lcos {

// One oracle exchange, exactly as it happened. Appended to a JSONL file so an
// interrupted run can resume and a finished run can be replayed offline.
struct QueryRecord {
  std::string dataset_id;
  std::string model_id;
  std::string template_hash;
  std::string source;  // variable name
  std::string target;  // variable name
  std::string verb;
  int attempt = 0;     // 0-based, increments on parse-failure retries
  std::string raw_response;
  std::optional<bool> parsed;
  std::int64_t timestamp = 0;  // unix seconds; informational only

  nlohmann::ordered_json to_json() const;
  static QueryRecord from_json(const nlohmann::json& j);
};

// In-memory index over (source, target, verb) plus an optional append-only
// backing file. Lookups only see records matching the context (dataset, model,
// template hash) the cache was opened with; foreign records are preserved but
// ignored.
class ResponseCache {
 public:
  ResponseCache(std::string dataset_id, std::string model_id,
                std::string template_hash);

  // Loads matching records from an existing JSONL file (missing file = empty
  // cache) and directs future appends to it.
  static ResponseCache open(const std::filesystem::path& file,
                            std::string dataset_id, std::string model_id,
                            std::string template_hash);

  // Records already sorted by arrival; empty vector if none.
  std::vector<QueryRecord> find(const std::string& source,
                                const std::string& target,
                                const std::string& verb) const;

  // Thread-safe; writes through to the backing file when one is attached.
  void append(const QueryRecord& record);

  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::string dataset_id_;
  std::string model_id_;
  std::string template_hash_;
  std::filesystem::path file_;
  // Held indirectly so the cache stays movable.
  std::unique_ptr<std::mutex> mutex_;
  std::map<std::tuple<std::string, std::string, std::string>,
           std::vector<QueryRecord>>
      index_;
  std::size_t count_ = 0;
};

}  // namespace lcos
