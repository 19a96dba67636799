#pragma once

#include <optional>

#include "pellphi/nat.hpp"

namespace pellphi::repdigit {

// d * (10^m - 1) / 9: m decimal digits, all equal to d.
struct RepdigitForm {
  unsigned digit = 1;   // 1..9
  unsigned length = 1;  // >= 1

  friend bool operator==(const RepdigitForm&, const RepdigitForm&) = default;
};

/// Throws arith::DomainError for a digit outside 1..9 or a zero length.
Nat repdigit_value(RepdigitForm form);

/// The form whose value is n, if any. 0 is not a repdigit.
std::optional<RepdigitForm> as_repdigit(const Nat& n);

}  // namespace pellphi::repdigit
