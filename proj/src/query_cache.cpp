#include "lcos/query_cache.hpp"

#include <fstream>

#include "lcos/errors.hpp"

namespace lcos {

nlohmann::ordered_json QueryRecord::to_json() const {
  nlohmann::ordered_json j;
  j["dataset"] = dataset_id;
  j["model"] = model_id;
  j["template_hash"] = template_hash;
  j["source"] = source;
  j["target"] = target;
  j["verb"] = verb;
  j["attempt"] = attempt;
  j["raw_response"] = raw_response;
  if (parsed.has_value()) {
    j["parsed"] = *parsed;
  } else {
    j["parsed"] = nullptr;
  }
  j["timestamp"] = timestamp;
  return j;
}

QueryRecord QueryRecord::from_json(const nlohmann::json& j) {
  try {
    QueryRecord r;
    r.dataset_id = j.at("dataset").get<std::string>();
    r.model_id = j.at("model").get<std::string>();
    r.template_hash = j.at("template_hash").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.verb = j.at("verb").get<std::string>();
    r.attempt = j.at("attempt").get<int>();
    r.raw_response = j.at("raw_response").get<std::string>();
    if (!j.at("parsed").is_null()) {
      r.parsed = j.at("parsed").get<bool>();
    }
    r.timestamp = j.value("timestamp", std::int64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed cache record: ") + e.what());
  }
}

ResponseCache::ResponseCache(std::string dataset_id, std::string model_id,
                             std::string template_hash)
    : dataset_id_(std::move(dataset_id)),
      model_id_(std::move(model_id)),
      template_hash_(std::move(template_hash)),
      mutex_(std::make_unique<std::mutex>()) {}

ResponseCache ResponseCache::open(const std::filesystem::path& file,
                                  std::string dataset_id, std::string model_id,
                                  std::string template_hash) {
  ResponseCache cache(std::move(dataset_id), std::move(model_id),
                      std::move(template_hash));
  cache.file_ = file;
  if (!std::filesystem::exists(file)) {
    return cache;
  }
  std::ifstream in(file);
  if (!in) {
    throw ValidationError("cannot read cache file " + file.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("cache file " + file.string() + " line " +
                            std::to_string(line_no) + ": " + e.what());
    }
    QueryRecord r = QueryRecord::from_json(j);
    if (r.dataset_id != cache.dataset_id_ || r.model_id != cache.model_id_ ||
        r.template_hash != cache.template_hash_) {
      continue;  // different context; keep on disk, skip in memory
    }
    cache.index_[{r.source, r.target, r.verb}].push_back(std::move(r));
    ++cache.count_;
  }
  return cache;
}

std::vector<QueryRecord> ResponseCache::find(const std::string& source,
                                             const std::string& target,
                                             const std::string& verb) const {
  std::lock_guard<std::mutex> lock(*mutex_);
  const auto it = index_.find({source, target, verb});
  if (it == index_.end()) return {};
  return it->second;
}

void ResponseCache::append(const QueryRecord& record) {
  std::lock_guard<std::mutex> lock(*mutex_);
  if (!file_.empty()) {
    std::ofstream out(file_, std::ios::app);
    if (!out) {
      throw ValidationError("cannot append to cache file " + file_.string());
    }
    out << record.to_json().dump() << '\n';
    out.flush();
    if (!out) {
      throw ValidationError("short write to cache file " + file_.string());
    }
  }
  index_[{record.source, record.target, record.verb}].push_back(record);
  ++count_;
}

std::size_t ResponseCache::size() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  return count_;
}

}  // namespace lcos
