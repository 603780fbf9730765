#pragma once

#include <stdexcept>
#include <string>

namespace hermicode {

/// Invalid parameters supplied by a caller (bad q, m out of range, malformed message).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration would exceed the configured size or memory guard.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant that construction relies on did not hold.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hermicode
