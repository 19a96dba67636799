#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pellphi {

// Arbitrary-precision natural number. Negative values never escape the
// public API; callers parse through parse_nat.
using Nat = mpz_class;

/// Parses a non-empty string of decimal digits. Throws std::invalid_argument
/// on signs, whitespace or any other character.
Nat parse_nat(std::string_view text);

std::string to_string(const Nat& n);

}  // namespace pellphi
