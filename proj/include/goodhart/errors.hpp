#pragma once

#include <stdexcept>
#include <string>

namespace goodhart {

/// Invalid configuration or violated config invariant. The CLI maps this
/// to exit code 2; anything else that escapes maps to 3.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace goodhart
