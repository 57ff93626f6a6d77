#pragma once

#include <stdexcept>
#include <string>

namespace ggp {

/// Raised when an argument lies outside the domain of an operation
/// (bad partition text, even characteristic, parameter range violations).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an arithmetic identity that must hold by construction fails.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ggp
