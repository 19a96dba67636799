#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pellphi/nat.hpp"
#include "pellphi/sequences.hpp"

namespace pellphi::modular {

// Least residues u(0) .. u(period-1) mod k of a purely periodic sequence.
struct PeriodTable {
  seq::SequenceKind kind = seq::SequenceKind::Pell;
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> residues;

  std::uint64_t period() const { return residues.size(); }
  std::uint64_t at(std::uint64_t n) const { return residues[n % residues.size()]; }
};

struct ResidueSet {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> members;  // sorted, unique, all < modulus

  bool contains(std::uint64_t r) const;
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// Period of the consecutive-pair state mod k, 2 <= k <= 1e6.
PeriodTable period_table(seq::SequenceKind kind, std::uint64_t k);

/// { n mod period : u(n) == r (mod k) }; the set's modulus is the period.
ResidueSet residue_preimages(seq::SequenceKind kind, std::uint64_t k, std::uint64_t r);
ResidueSet residue_preimages(const PeriodTable& table, std::uint64_t r);

/// { x^2 mod k }, including 0.
ResidueSet qr_set(std::uint64_t k);

/// Residues r with poly(r) mod k a square; coefficients highest degree
/// first, signed, reduced mod k before evaluation.
ResidueSet poly_qr_filter(std::span<const std::int64_t> coeffs, std::uint64_t k);

/// Residue of poly(r) mod k.
std::uint64_t eval_poly_mod(std::span<const std::int64_t> coeffs, std::uint64_t r,
                            std::uint64_t k);

/// Eventual cycle of { base^m mod k : m >= 1 }.
ResidueSet power_residue_set(const Nat& base, std::uint64_t k);

}  // namespace pellphi::modular
