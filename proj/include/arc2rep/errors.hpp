// Error types shared by the library and the command-line driver.
#pragma once

#include <stdexcept>
#include <string>

namespace arc2rep {

// Raised when a request exceeds a configured size bound.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an algebraic construction cannot be carried out, for instance a
// power series whose leading coefficient is not invertible.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arc2rep
