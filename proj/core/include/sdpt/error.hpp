#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sdpt {

/// Every recoverable failure thrown by the library. `kind()` is a stable
/// machine-readable tag that the CLI forwards in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sdpt
