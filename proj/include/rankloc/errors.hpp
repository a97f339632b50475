#pragma once

#include <stdexcept>
#include <string>

namespace rankloc {

/// Thrown when an exhaustive enumeration would exceed its configured guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankloc
