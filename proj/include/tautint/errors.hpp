#pragma once

#include <stdexcept>
#include <string>

namespace tautint {

/// Thrown when a formula is evaluated at a genus where it is undefined
/// (the terminal-form values and the arithmetic engine carry g-1
/// denominators).
class SingularGenusError : public std::domain_error {
 public:
  explicit SingularGenusError(const std::string& what_arg)
      : std::domain_error(what_arg) {}
};

}  // namespace tautint
