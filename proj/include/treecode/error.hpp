#pragma once

#include <stdexcept>
#include <string>

namespace treecode {

/// Raised when an operation's precondition on its (domain) inputs fails:
/// mismatched fields, labels outside an index set, enumeration caps, etc.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal invariant is violated. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace treecode
