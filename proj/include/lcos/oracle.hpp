#pragma once

#include <functional>
#include <mutex>
#include <string>

namespace lcos {

// Something that answers a prompt with free text. Implementations must be
// safe to call from multiple threads.
class Oracle {
 public:
  virtual ~Oracle() = default;

  // Identifier recorded alongside cached responses (e.g. the model name).
  virtual std::string id() const = 0;

  // Throws TransportError when no answer could be obtained.
  virtual std::string complete(const std::string& prompt) = 0;
};

// Talks to an OpenAI-style chat-completions endpoint (the de-facto interface
// of ollama, vllm, llama.cpp servers and most hosted APIs).
class HttpOracle : public Oracle {
 public:
  struct Options {
    std::string endpoint;  // e.g. "http://localhost:11434"
    std::string model;
    std::string api_key;   // optional bearer token
    std::string path = "/v1/chat/completions";
    double temperature = 0.0;
    int timeout_seconds = 120;
    int max_tokens = 16;
  };

  explicit HttpOracle(Options options);

  std::string id() const override { return options_.model; }
  std::string complete(const std::string& prompt) override;

 private:
  Options options_;
};

// Deterministic oracle backed by a callback; used by tests and the synthetic
// path's plumbing checks.
class ScriptedOracle : public Oracle {
 public:
  using Responder = std::function<std::string(const std::string& prompt)>;

  ScriptedOracle(std::string id, Responder responder)
      : id_(std::move(id)), responder_(std::move(responder)) {}

  std::string id() const override { return id_; }

  std::string complete(const std::string& prompt) override {
    std::lock_guard<std::mutex> lock(mutex_);
    return responder_(prompt);
  }

 private:
  std::string id_;
  Responder responder_;
  std::mutex mutex_;
};

}  // namespace lcos
