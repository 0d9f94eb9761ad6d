#pragma once

#include <stdexcept>
#include <string>

namespace hyperising {

/// Invalid run configuration (bad key, missing field, malformed value).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested operation exceeds what the selected engine can do
/// (e.g. dense operations beyond the configured site limit).
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}
