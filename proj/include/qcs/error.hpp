#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Domain-contract violation (bad input, failed exactness check, ...).
class math_error : public std::runtime_error {
public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed quiver file, word, or CLI input.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Configured work ceiling exceeded.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcs
