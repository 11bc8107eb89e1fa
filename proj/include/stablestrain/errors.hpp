#pragma once

#include <stdexcept>
#include <string>

namespace stablestrain {

/// A deformation state outside the admissible set (J <= 0, negative stretch², ...).
class InadmissibleState : public std::domain_error {
 public:
  explicit InadmissibleState(const std::string& what) : std::domain_error(what) {}
};

}  // namespace stablestrain
