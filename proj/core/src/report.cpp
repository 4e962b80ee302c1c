#include "rinfty/report.hpp"

#include <fmt/format.h>

namespace rinfty {

std::string describe(const TruncationPolicy& policy) {
  return fmt::format("W={} L={} A={}", policy.max_weight, policy.max_lambda, policy.max_arity);
}

}  // namespace rinfty
