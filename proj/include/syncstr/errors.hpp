#pragma once

#include <stdexcept>
#include <string>

#include "syncstr/sync_string.hpp"

namespace syncstr {

/* Bad parameters or malformed input. CLI exit code 2. */
class param_error : public std::invalid_argument {
 public:
  explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

/* A construction-time gate failed: the built object does not verify.
 * Carries the offending violation. CLI exit code 1. */
class construction_error : public std::runtime_error {
 public:
  construction_error(const std::string& what, Violation v)
      : std::runtime_error(what), violation(std::move(v)) {}
  Violation violation;
};

/* A resampling / retry / node budget ran out. CLI exit code 3. */
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
  budget_error(const std::string& what, Violation last)
      : std::runtime_error(what), last_violation(std::move(last)), has_violation(true) {}
  Violation last_violation;
  bool has_violation = false;
};

}  // namespace syncstr
