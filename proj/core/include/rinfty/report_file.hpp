#pragma once

// Report documents written by the command-line tool, in a text form for
// people and a JSON form for machines. Output is a pure function of the
// input bytes, the command and the policy.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rinfty/transfer.hpp"

namespace rinfty {

std::string tool_version();

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct ReportDoc {
  std::string command;
  std::string input_digest;
  TruncationPolicy policy;
  std::vector<CheckReport> checks;
  std::optional<LambdaSeries<PolyMap>> mu;  // transfer output, order 0 is l

  std::size_t failure_count() const;
  bool passed() const { return failure_count() == 0; }
};

std::string render_text(const ReportDoc& doc);
std::string render_machine(const ReportDoc& doc);

}  // namespace rinfty
