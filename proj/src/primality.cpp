#include <array>

#include "internal.hpp"
#include "pellphi/arith.hpp"

namespace pellphi::arith {

namespace {

constexpr std::array<unsigned, 13> kFixedWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};
constexpr int kRandomBases = 64;
constexpr unsigned long kBaseSeed = 0x9e3779b97f4a7c15UL;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// n odd, n > 3.
bool strong_probable_prime(const Nat& n, const Nat& base, const Nat& d,
                           unsigned s) {
  const Nat n_minus_1 = n - 1;
  Nat x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

Nat half_mod(Nat x, const Nat& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  return x >> 1;
}

// Strong Lucas probable-prime test with Selfridge parameters (P=1).
bool strong_lucas_probable_prime(const Nat& n) {
  if (isqrt(n).exact) return false;
  long d_value = 5;
  for (;;) {
    Nat d_mod = Nat(d_value) % n;
    if (d_mod < 0) d_mod += n;
    const int j = jacobi(d_mod, n);
    if (j == -1) break;
    if (j == 0 && abs(Nat(d_value)) != n) return false;
    d_value = d_value > 0 ? -(d_value + 2) : -d_value + 2;
  }
  Nat q = Nat((1 - d_value) / 4) % n;
  if (q < 0) q += n;
  Nat dd = Nat(d_value) % n;
  if (dd < 0) dd += n;

  Nat d = n + 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }

  Nat u = 1;
  Nat v = 1;
  Nat qk = q;
  const auto bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (auto i = static_cast<long>(bits) - 2; i >= 0; --i) {
    u = u * v % n;
    v = (v * v - 2 * qk) % n;
    if (v < 0) v += n;
    qk = qk * qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      Nat u_next = half_mod(u + v, n);
      Nat v_next = half_mod(dd * u + v, n);
      u = u_next % n;
      v = v_next % n;
      qk = qk * q % n;
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = (v * v - 2 * qk) % n;
    if (v < 0) v += n;
    if (v == 0) return true;
    qk = qk * qk % n;
  }
  return false;
}

}  // namespace

const Nat& deterministic_primality_bound() {
  static const Nat bound("3317044064679887385961981", 10);
  return bound;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Primality classify_prime(const Nat& n) {
  if (n < 2) return Primality::Composite;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    return is_prime_u64(n.get_ui()) ? Primality::Prime : Primality::Composite;
  }
  for (std::uint32_t p : detail::small_primes()) {
    if (p > 1000) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
  }

  Nat d = n - 1;
  const unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  d >>= s;

  if (n < deterministic_primality_bound()) {
    for (unsigned a : kFixedWitnesses) {
      if (!strong_probable_prime(n, Nat(a), d, s)) return Primality::Composite;
    }
    return Primality::Prime;
  }

  if (!strong_probable_prime(n, Nat(2), d, s)) return Primality::Composite;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(kBaseSeed);
  const Nat span = n - 4;
  for (int i = 1; i < kRandomBases; ++i) {
    const Nat base = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, base, d, s)) return Primality::Composite;
  }
  return strong_lucas_probable_prime(n) ? Primality::ProbablePrime
                                        : Primality::Composite;
}

bool is_prime(const Nat& n) {
  return classify_prime(n) != Primality::Composite;
}

}  // namespace pellphi::arith
