#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rinfty {

/// Caps within which every identity is certified: symmetric weight W,
/// lambda-order L and arity A.
struct TruncationPolicy {
  int max_weight = 4;
  int max_lambda = 3;
  int max_arity = 4;

  bool operator==(const TruncationPolicy&) const = default;
};

std::string describe(const TruncationPolicy& policy);

/// One located failure: where it happened, on which input, and the nonzero
/// value that should have vanished.
struct Witness {
  std::string where;
  std::string input;
  std::string value;
};

/// Reports are total: they enumerate every failure within the caps.
struct CheckReport {
  std::string check;
  TruncationPolicy policy;
  std::size_t cases = 0;
  std::vector<Witness> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  void fail(std::string where, std::string input, std::string value) {
    failures.push_back({std::move(where), std::move(input), std::move(value)});
  }
};

}  // namespace rinfty
