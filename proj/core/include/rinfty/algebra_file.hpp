#pragma once

// Algebra description files: generators, brackets, an optional r-matrix and
// an optional truncation policy, written in YAML. See docs/algebra_format.md.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rinfty/errors.hpp"
#include "rinfty/linfty.hpp"
#include "rinfty/transfer.hpp"

namespace rinfty {

enum class ParseErrorKind {
  Syntax,
  UnknownId,
  DuplicateGenerator,
  NonRational,
  DegreeMismatch,
  VanishingWord,
  Io,
};

const char* kind_name(ParseErrorKind kind);

/// A located parse failure. line and column are 1-based; 0 means unknown.
class ParseError : public InvalidInput {
 public:
  ParseError(ParseErrorKind kind, std::string source, int line, int column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  std::string source_;
  int line_;
  int column_;
  std::string message_;
};

struct AlgebraSpec {
  LInftyAlg algebra;
  std::optional<RMatrix> rmatrix;
  std::optional<TruncationPolicy> policy;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
};

AlgebraSpec parse_algebra_text(std::string_view text, const std::string& source = "<input>");
AlgebraSpec parse_algebra(const std::filesystem::path& path);

/// Canonical form: generators in declared order, one bracket entry per
/// canonical input word, r-matrix terms by order then word.
std::string serialize_algebra(const AlgebraSpec& spec);

}  // namespace rinfty
