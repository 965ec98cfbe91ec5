#include "lcos/oracle.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "lcos/errors.hpp"

namespace lcos {

HttpOracle::HttpOracle(Options options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) {
    throw ValidationError("live oracle requires an endpoint");
  }
  if (options_.model.empty()) {
    throw ValidationError("live oracle requires a model name");
  }
}

std::string HttpOracle::complete(const std::string& prompt) {
  nlohmann::ordered_json body;
  body["model"] = options_.model;
  body["messages"] =
      nlohmann::ordered_json::array({{{"role", "user"}, {"content", prompt}}});
  body["temperature"] = options_.temperature;
  body["max_tokens"] = options_.max_tokens;

  // One client per call: httplib clients are not safe for concurrent use, and
  // connection setup is negligible next to model latency.
  httplib::Client client(options_.endpoint);
  client.set_connection_timeout(options_.timeout_seconds, 0);
  client.set_read_timeout(options_.timeout_seconds, 0);
  client.set_write_timeout(options_.timeout_seconds, 0);
  if (!options_.api_key.empty()) {
    client.set_bearer_token_auth(options_.api_key);
  }

  httplib::Result result =
      client.Post(options_.path, body.dump(), "application/json");

  if (!result) {
    throw TransportError("request to " + options_.endpoint + options_.path +
                         " failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("endpoint returned HTTP " +
                         std::to_string(result->status) + ": " +
                         result->body.substr(0, 200));
  }
  try {
    const auto j = nlohmann::json::parse(result->body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("unexpected response body: ") + e.what());
  }
}

}  // namespace lcos
