#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rinfty {

/// Exact coefficient field. Everything in the engine is over Q.
using Rational = mpq_class;

/// Parses "p" or "p/q" with optional leading sign. Decimals and floats are
/// rejected; throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

Rational factorial(int n);

}  // namespace rinfty
