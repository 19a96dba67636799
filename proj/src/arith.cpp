#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "pellphi/arith.hpp"

namespace pellphi::arith {

namespace detail {

namespace {

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i) {
      composite[j] = true;
    }
  }
  return primes;
}

// r^k <= n, saturating.
bool power_at_most(std::uint64_t r, unsigned k, std::uint64_t n) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return false;
  }
  return true;
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(kTrialBound);
  return primes;
}

std::span<const std::uint32_t> stage2_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(kStage2Bound);
  return primes;
}

RootResult iroot_u64(std::uint64_t n, unsigned k) {
  if (n < 2 || k == 1) return {Nat(static_cast<unsigned long>(n)), true};
  if (k >= 64) return {Nat(1), n == 1};
  auto r = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
  while (r > 0 && !power_at_most(r, k, n)) --r;
  while (power_at_most(r + 1, k, n)) ++r;
  unsigned __int128 check = 1;
  for (unsigned i = 0; i < k; ++i) check *= r;
  return {Nat(static_cast<unsigned long>(r)), check == n};
}

}  // namespace detail

bool Factorization::has_probable_primes() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.probable; });
}

Nat Factorization::value() const {
  Nat product = cofactor;
  for (const auto& [p, a, probable] : factors) {
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), a);
    product *= power;
  }
  return product;
}

Factorization merge(const Factorization& a, const Factorization& b) {
  Factorization out;
  out.cofactor = a.cofactor * b.cofactor;
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() || (i != a.factors.end() && i->prime < j->prime)) {
      out.factors.push_back(*i++);
    } else if (i == a.factors.end() || j->prime < i->prime) {
      out.factors.push_back(*j++);
    } else {
      out.factors.push_back({i->prime, i->exponent + j->exponent,
                             i->probable && j->probable});
      ++i;
      ++j;
    }
  }
  return out;
}

Nat totient(const Factorization& f) {
  if (!f.complete()) {
    throw IncompleteFactorization("totient of a partial factorization (cofactor " +
                                  to_string(f.cofactor) + ")");
  }
  Nat phi = 1;
  for (const auto& [p, a, probable] : f.factors) {
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), a - 1);
    phi *= power * (p - 1);
  }
  return phi;
}

unsigned v2(const Nat& n) {
  if (n <= 0) throw DomainError("v2 is undefined for 0");
  return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

int jacobi(const Nat& a_in, const Nat& n_in) {
  if (n_in < 3 || mpz_even_p(n_in.get_mpz_t())) {
    throw DomainError("jacobi symbol needs an odd modulus >= 3, got " +
                      to_string(n_in));
  }
  Nat a = a_in % n_in;
  if (a < 0) a += n_in;
  Nat n = n_in;
  int result = 1;
  while (a != 0) {
    const auto twos = mpz_scan1(a.get_mpz_t(), 0);
    a >>= twos;
    const unsigned long n_mod_8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
    if ((twos & 1) && (n_mod_8 == 3 || n_mod_8 == 5)) result = -result;
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

RootResult iroot(const Nat& n, unsigned k) {
  if (k == 0) throw DomainError("zeroth root");
  if (n < 0) throw DomainError("root of a negative number");
  if (mpz_fits_ulong_p(n.get_mpz_t())) return detail::iroot_u64(n.get_ui(), k);

  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Nat x = Nat(1) << static_cast<mp_bitcnt_t>((bits + k - 1) / k);
  Nat power;
  for (;;) {
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), k - 1);
    Nat y = ((k - 1) * x + n / power) / k;
    if (y >= x) break;
    x = std::move(y);
  }
  mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), k);
  return {x, power == n};
}

RootResult isqrt(const Nat& n) { return iroot(n, 2); }

std::optional<PerfectPower> perfect_power(const Nat& n) {
  if (n < 1) throw DomainError("perfect_power needs n >= 1");
  if (n == 1) return PerfectPower{Nat(1), 2};

  Nat base = n;
  unsigned exponent = 1;
  bool peeled = true;
  while (peeled && base > 1) {
    peeled = false;
    const auto log2 = mpz_sizeinbase(base.get_mpz_t(), 2) - 1;
    for (std::uint32_t p : detail::small_primes()) {
      if (p > log2) break;
      auto [root, exact] = iroot(base, p);
      if (exact) {
        base = std::move(root);
        exponent *= p;
        peeled = true;
        break;
      }
    }
  }
  if (exponent < 2) return std::nullopt;
  return PerfectPower{base, exponent};
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t k) {
  if (k < 2) throw DomainError("modulus must be >= 2");
  const auto m = static_cast<__int128>(k);
  __int128 r0 = ((a % m) + m) % m;
  __int128 r1 = m;
  __int128 s0 = 1;
  __int128 s1 = 0;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    throw DomainError(std::to_string(a) + " is not invertible modulo " +
                      std::to_string(k));
  }
  return static_cast<std::uint64_t>(((s0 % m) + m) % m);
}

}  // namespace pellphi::arith
