#pragma once

#include <stdexcept>
#include <string>

namespace wavegraph {

// Requested work exceeds a hard engine limit (term power cap, basis size cap).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// An orthonormalization or Gram solve hit a numerically dependent basis.
// index() names the offending basis function (1-based).
class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// Rejected run configuration or command line; the message names the field.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavegraph
