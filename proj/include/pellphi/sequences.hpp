#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pellphi/nat.hpp"

namespace pellphi::seq {

// Pell: 0, 1, 2, 5, 12, ...  u(n+1) = 2u(n) + u(n-1)
// AssocPell: 1, 1, 3, 7, 17, ...  same recurrence
// Balancing: 0, 1, 6, 35, ...  u(n+1) = 6u(n) - u(n-1), P(2n) = 2B(n)
enum class SequenceKind { Pell, AssocPell, Balancing };

std::string_view name(SequenceKind kind);
/// Accepts "pell", "assoc-pell" (or "assocpell", "q") and "balancing".
/// Throws std::invalid_argument otherwise.
SequenceKind parse_kind(std::string_view text);

struct PellPair {
  std::uint64_t index = 0;
  Nat p;  // P(n)
  Nat q;  // Q(n)
};

/// (P(n), Q(n)) by binary index doubling.
PellPair pell_pair(std::uint64_t n);

/// n-th term via index doubling (Balancing through B(n) = P(2n) / 2).
Nat term(SequenceKind kind, std::uint64_t n);

/// Terms 0..n_max inclusive by the linear recurrence.
std::vector<Nat> terms_upto(SequenceKind kind, std::uint64_t n_max);

}  // namespace pellphi::seq
