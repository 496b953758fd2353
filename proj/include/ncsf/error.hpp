#pragma once

#include <stdexcept>
#include <string>

namespace ncsf {

/// Raised when an operation's precondition on its mathematical input fails
/// (empty composition, refinement order violated, division by zero, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace ncsf
