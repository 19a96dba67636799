#pragma once

#include <cstdint>
#include <span>

#include "pellphi/arith.hpp"

namespace pellphi::arith::detail {

inline constexpr std::uint32_t kTrialBound = 100'000;
inline constexpr std::uint32_t kStage2Bound = 10'000'000;

/// Primes below kTrialBound.
std::span<const std::uint32_t> small_primes();
/// Primes below kStage2Bound; built on first use.
std::span<const std::uint32_t> stage2_primes();

RootResult iroot_u64(std::uint64_t n, unsigned k);

}  // namespace pellphi::arith::detail
