#include "rdbe/llm_client.hpp"

#include <charconv>
#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "rdbe/errors.hpp"
#include "rdbe/hash.hpp"
#include "rdbe/score_grid.hpp"

namespace rdbe {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path prefix, no trailing slash
};

SplitUrl split_url(const std::string& base_url) {
  auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCategory::config, "endpoint base_url needs a scheme: " + base_url);
  }
  auto path_start = base_url.find('/', scheme_end + 3);
  SplitUrl out;
  if (path_start == std::string::npos) {
    out.origin = base_url;
  } else {
    out.origin = base_url.substr(0, path_start);
    out.prefix = base_url.substr(path_start);
    while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  }
  return out;
}

class HttpLLMClient : public LLMClient {
 public:
  explicit HttpLLMClient(EndpointConfig config) : config_(std::move(config)) {
    if (config_.base_url.empty()) {
      throw Error(ErrorCategory::config, "endpoint base_url not configured");
    }
    if (config_.api_key.empty()) {
      throw EndpointError("RDBE_API_KEY not set", /*retryable=*/false, /*auth=*/true);
    }
  }

  std::string complete(const std::string& system, const std::string& user,
                       const GenParams& params) override {
    SplitUrl url = split_url(config_.base_url);
    httplib::Client cli(url.origin);
    cli.set_connection_timeout(config_.timeout_s);
    cli.set_read_timeout(config_.timeout_s);
    cli.set_bearer_token_auth(config_.api_key);

    nlohmann::json body{
        {"model", config_.model_id},
        {"temperature", params.temperature},
        {"max_tokens", params.max_output_tokens},
        {"messages",
         {{{"role", "system"}, {"content", system}},
          {{"role", "user"}, {"content", user}}}}};

    auto res = cli.Post(url.prefix + "/chat/completions", body.dump(),
                        "application/json");
    calls_.fetch_add(1);

    if (!res) {
      throw EndpointError("connection failed: " + httplib::to_string(res.error()),
                          /*retryable=*/true);
    }
    if (res->status == 401 || res->status == 403) {
      throw EndpointError("authentication failed (HTTP " +
                              std::to_string(res->status) + ")",
                          /*retryable=*/false, /*auth=*/true);
    }
    if (res->status == 429 || res->status >= 500) {
      std::optional<double> retry_after;
      if (res->has_header("Retry-After")) {
        const std::string v = res->get_header_value("Retry-After");
        double secs = 0.0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), secs);
        if (ec == std::errc{} && p == v.data() + v.size()) retry_after = secs;
      }
      throw EndpointError("HTTP " + std::to_string(res->status) + " from endpoint",
                          /*retryable=*/true, /*auth=*/false, retry_after);
    }
    if (res->status != 200) {
      throw EndpointError("HTTP " + std::to_string(res->status) + ": " + res->body,
                          /*retryable=*/false);
    }

    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw EndpointError(std::string("bad endpoint JSON: ") + e.what(),
                          /*retryable=*/true);
    }
    try {
      return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      throw EndpointError("endpoint response missing choices[0].message.content",
                          /*retryable=*/true);
    }
  }

  std::uint64_t calls() const override { return calls_.load(); }

 private:
  EndpointConfig config_;
  std::atomic<std::uint64_t> calls_{0};
};

// Pulls the payload of the final "[Score]\n<value>" block, if any.
std::optional<std::string> extract_score_block(const std::string& user) {
  const std::string tag = "[Score]\n";
  auto pos = user.rfind(tag);
  if (pos == std::string::npos) return std::nullopt;
  std::string rest = user.substr(pos + tag.size());
  auto nl = rest.find('\n');
  if (nl != std::string::npos) rest = rest.substr(0, nl);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r')) rest.pop_back();
  if (rest.empty()) return std::nullopt;
  return rest;
}

}  // namespace

std::unique_ptr<LLMClient> make_http_client(const EndpointConfig& config) {
  return std::make_unique<HttpLLMClient>(config);
}

std::string MockLLMClient::complete(const std::string& /*system*/,
                                    const std::string& user,
                                    const GenParams& /*params*/) {
  calls_.fetch_add(1);
  if (auto score = extract_score_block(user)) {
    return "Mock reasoning: judged only against the stated rubric, the essay "
           "shows the strengths and weaknesses expected at this level, which "
           "supports a score of " +
           *score;
  }
  // No [Score] block (zero-shot style prompt): derive a stable grid score
  // from the prompt bytes.
  ScoreGrid grid;
  unsigned long h = std::strtoul(sha256_hex(user).substr(0, 8).c_str(), nullptr, 16);
  double score = grid.values()[h % grid.size()];
  return "Considering the rubric as instructed, I would assign " + format_score(score);
}

}  // namespace rdbe
