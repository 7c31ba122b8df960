#pragma once

#include <stdexcept>
#include <string>

namespace rank2sg {

// Raised for inputs that are well formed but mathematically invalid.
// The code is a short stable tag such as "duplicate-target".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace rank2sg
