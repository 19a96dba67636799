#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pellphi/nat.hpp"

namespace pellphi::arith {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IncompleteFactorization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Budget = std::chrono::duration<double>;
inline constexpr Budget kDefaultBudget{10.0};

// Largest bound below which the fixed witness set {2,...,41} is a proof.
// 3317044064679887385961981 ~ 3.3e24.
const Nat& deterministic_primality_bound();

enum class Primality { Composite, ProbablePrime, Prime };

/// Prime for n below deterministic_primality_bound(); above it a 64-base
/// strong probable-prime battery plus a strong Lucas test, reported as
/// ProbablePrime.
Primality classify_prime(const Nat& n);
bool is_prime(const Nat& n);
bool is_prime_u64(std::uint64_t n);

struct PrimePower {
  Nat prime;
  unsigned exponent = 1;
  bool probable = false;  // primality from the probabilistic battery

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, product(p^a) * cofactor == original number.
struct Factorization {
  std::vector<PrimePower> factors;
  Nat cofactor = 1;

  bool complete() const { return cofactor == 1; }
  bool has_probable_primes() const;
  Nat value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division by primes below 1e5, then a short Brent rho run, a
/// Pollard p-1 pass and Brent rho until the budget runs out. Never fails:
/// whatever is left unsplit stays in the cofactor.
Factorization factorize(const Nat& n, Budget budget = kDefaultBudget);

/// Merges two factorizations of coprime-or-not numbers into one of their
/// product. Cofactors multiply.
Factorization merge(const Factorization& a, const Factorization& b);

/// prod p^(a-1) (p-1). Throws IncompleteFactorization on a partial input.
Nat totient(const Factorization& f);

/// 2-adic valuation; DomainError for 0.
unsigned v2(const Nat& n);

/// Jacobi symbol (a/n) for odd n >= 3; DomainError otherwise.
int jacobi(const Nat& a, const Nat& n);

struct RootResult {
  Nat root;
  bool exact = false;
};

/// floor(n^(1/k)) by Newton iteration, k >= 1.
RootResult iroot(const Nat& n, unsigned k);
RootResult isqrt(const Nat& n);

struct PerfectPower {
  Nat base;
  unsigned exponent = 2;

  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

/// n = base^exponent with the exponent maximal and >= 2; perfect_power(1)
/// is (1, 2) by convention. Empty when n is not a perfect power.
std::optional<PerfectPower> perfect_power(const Nat& n);

/// Inverse of a modulo k via extended gcd; DomainError if gcd(a, k) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t k);

}  // namespace pellphi::arith
