#ifndef RDBE_ERRORS_HPP
#define RDBE_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace rdbe {

// Error categories map to CLI exit codes (see tools/rdbe_main.cpp).
enum class ErrorCategory { config, io, data, endpoint, internal };

inline const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::config: return "config";
    case ErrorCategory::io: return "io";
    case ErrorCategory::data: return "data";
    case ErrorCategory::endpoint: return "endpoint";
    case ErrorCategory::internal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

// Failure talking to a chat-completion endpoint. `retryable` drives the
// retry loop; `retry_after_s` carries a rate-limit hint when the endpoint
// sent one; `auth` marks credential problems that abort a whole run.
class EndpointError : public Error {
 public:
  EndpointError(const std::string& message, bool retryable, bool auth = false,
                std::optional<double> retry_after_s = std::nullopt)
      : Error(ErrorCategory::endpoint, message),
        retryable_(retryable),
        auth_(auth),
        retry_after_s_(retry_after_s) {}

  bool retryable() const { return retryable_; }
  bool auth() const { return auth_; }
  std::optional<double> retry_after_s() const { return retry_after_s_; }

 private:
  bool retryable_;
  bool auth_;
  std::optional<double> retry_after_s_;
};

}  // namespace rdbe

#endif
