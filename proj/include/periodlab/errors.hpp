#pragma once

#include <stdexcept>
#include <string>

namespace periodlab {

/// Thrown when an enumeration request exceeds the configured size cap.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace periodlab
