#pragma once

#include <stdexcept>
#include <string>

namespace dacp {

// Bad configuration: unknown keys, out-of-range parameters, missing files
// named in a config. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: malformed JSONL, duplicate ids, unscorable documents,
// budgets that exceed the corpus. Maps to exit code 3 in the CLI.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dacp
