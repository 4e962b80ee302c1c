#pragma once

#include <stdexcept>
#include <string>

namespace rinfty {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rinfty
