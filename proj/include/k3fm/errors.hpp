#pragma once

#include <stdexcept>
#include <string>

namespace k3fm {

// Input fails structural validation or a stated precondition.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search or a postcondition check failed at runtime.
struct computation_error : std::runtime_error {
  explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k3fm
