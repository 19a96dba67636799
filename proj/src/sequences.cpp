#include "pellphi/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace pellphi::seq {

std::string_view name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Pell:
      return "pell";
    case SequenceKind::AssocPell:
      return "assoc-pell";
    case SequenceKind::Balancing:
      return "balancing";
  }
  return "unknown";
}

SequenceKind parse_kind(std::string_view text) {
  if (text == "pell" || text == "p") return SequenceKind::Pell;
  if (text == "assoc-pell" || text == "assocpell" || text == "q") {
    return SequenceKind::AssocPell;
  }
  if (text == "balancing" || text == "b") return SequenceKind::Balancing;
  throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "'");
}

PellPair pell_pair(std::uint64_t n) {
  Nat p = 0;
  Nat q = 1;
  std::uint64_t k = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // k -> 2k
    const Nat q_square = q * q;
    const Nat two_p_square = 2 * p * p;
    Nat q_doubled = q_square + two_p_square;
    // Q(2k) = 2 Q(k)^2 - (-1)^k must agree with Q(k)^2 + 2 P(k)^2.
    const Nat q_check = 2 * q_square - ((k % 2 == 0) ? 1 : -1);
    if (q_doubled != q_check) {
      throw std::logic_error("Q doubling identities disagree at index " +
                             std::to_string(k));
    }
    p = 2 * p * q;
    q = std::move(q_doubled);
    k *= 2;
    if ((n >> bit) & 1) {
      // k -> k + 1
      Nat p_next = p + q;
      q = 2 * p + q;
      p = std::move(p_next);
      ++k;
    }
  }
  return {n, std::move(p), std::move(q)};
}

Nat term(SequenceKind kind, std::uint64_t n) {
  switch (kind) {
    case SequenceKind::Pell:
      return pell_pair(n).p;
    case SequenceKind::AssocPell:
      return pell_pair(n).q;
    case SequenceKind::Balancing:
      if (n > UINT64_MAX / 2) throw std::out_of_range("balancing index too large");
      return pell_pair(2 * n).p / 2;
  }
  throw std::invalid_argument("unknown sequence kind");
}

std::vector<Nat> terms_upto(SequenceKind kind, std::uint64_t n_max) {
  std::vector<Nat> out;
  out.reserve(n_max + 1);
  Nat a = (kind == SequenceKind::AssocPell) ? 1 : 0;
  Nat b = 1;
  const long multiplier = (kind == SequenceKind::Balancing) ? 6 : 2;
  const long sign = (kind == SequenceKind::Balancing) ? -1 : 1;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.push_back(a);
    Nat next = multiplier * b + sign * a;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

}  // namespace pellphi::seq
