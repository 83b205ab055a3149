#ifndef RDBE_LLM_CLIENT_HPP
#define RDBE_LLM_CLIENT_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "rdbe/prompts.hpp"

namespace rdbe {

// A chat-completion endpoint. Implementations must be safe for concurrent
// complete() calls; synthesis issues bounded parallel requests.
class LLMClient {
 public:
  virtual ~LLMClient() = default;
  virtual std::string complete(const std::string& system,
                               const std::string& user,
                               const GenParams& params) = 0;
  // Total completions served; used by cache-economy checks.
  virtual std::uint64_t calls() const = 0;
};

struct EndpointConfig {
  std::string base_url;  // e.g. https://api.example.com/openai/v1
  std::string model_id;
  std::string api_key;   // from RDBE_API_KEY
  int timeout_s = 120;
};

// Talks to an OpenAI-style /chat/completions endpoint over HTTP(S).
std::unique_ptr<LLMClient> make_http_client(const EndpointConfig& config);

// Pure function of its inputs: replies with deterministic reasoning text.
// When the user message carries a "[Score]" block the reply ends with that
// score; otherwise the score derives from a hash of the user text.
class MockLLMClient : public LLMClient {
 public:
  std::string complete(const std::string& system, const std::string& user,
                       const GenParams& params) override;
  std::uint64_t calls() const override { return calls_.load(); }

 private:
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace rdbe

#endif
