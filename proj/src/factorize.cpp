#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "internal.hpp"
#include "pellphi/arith.hpp"

namespace pellphi::arith {

namespace {

using Clock = std::chrono::steady_clock;

constexpr unsigned kRhoBatch = 128;
constexpr std::uint64_t kShortRhoIterations = 1 << 15;
constexpr std::uint32_t kStage1Bound = 100'000;

class Deadline {
 public:
  explicit Deadline(Budget budget)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}
  bool passed() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t rho_u64(std::uint64_t n, const Deadline& deadline) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t increment = 1;; ++increment) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + increment) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
        ys = y;
        const auto steps = std::min<std::uint64_t>(kRhoBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      if (g == 1 && deadline.passed()) return 0;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
    if (deadline.passed()) return 0;
  }
}

// Brent's cycle variant of Pollard rho on x -> x^2 + increment. Returns 0
// when the deadline or iteration cap is hit, n when this increment failed.
Nat rho(const Nat& n, unsigned long increment, std::uint64_t max_iterations,
        const Deadline& deadline) {
  mpz_srcptr modulus = n.get_mpz_t();
  Nat x = 2, y = 2, ys = 2, q = 1, g = 1, diff, square;
  auto step = [&](Nat& v) {
    mpz_mul(square.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add_ui(square.get_mpz_t(), square.get_mpz_t(), increment);
    mpz_mod(v.get_mpz_t(), square.get_mpz_t(), modulus);
  };
  std::uint64_t iterations = 0;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const auto steps = std::min<std::uint64_t>(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        step(y);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        mpz_mul(square.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
        mpz_mod(q.get_mpz_t(), square.get_mpz_t(), modulus);
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), modulus);
      iterations += steps;
      if (g == 1 && (iterations >= max_iterations || deadline.passed())) {
        return 0;
      }
    }
    iterations += r;
  }
  if (g == n) {
    do {
      step(ys);
      mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), modulus);
    } while (g == 1);
  }
  return g;
}

// Pollard p-1 with a prime-by-prime second stage. Returns 0 on failure.
// Rebuilds base^(q * stage-1 exponent) one prime factor at a time so that two
// prime factors caught by the same gcd can separate. Every prime factor of n
// caught with q has p - 1 dividing that exponent, so any base can be tried.
Nat p_minus_1_backtrack(const Nat& n, std::uint64_t q, const Deadline& deadline) {
  const auto primes = detail::stage2_primes();
  Nat g;
  for (unsigned long base = 2; base < 200 && !deadline.passed(); ++base) {
    Nat x = base;
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), q, n.get_mpz_t());
    for (std::size_t idx = 0; idx < primes.size() && primes[idx] <= kStage1Bound; ++idx) {
      const std::uint64_t p = primes[idx];
      bool done = false;
      for (std::uint64_t pk = p; pk <= kStage1Bound && !done; pk *= p) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, n.get_mpz_t());
        Nat x_minus_1 = x - 1;
        mpz_gcd(g.get_mpz_t(), x_minus_1.get_mpz_t(), n.get_mpz_t());
        if (g > 1 && g < n) return g;
        done = g == n;
      }
      if (done) break;
    }
  }
  return 0;
}

Nat pollard_p_minus_1(const Nat& n, const Deadline& deadline) {
  const auto primes = detail::stage2_primes();
  Nat a = 2;
  std::size_t idx = 0;
  for (; idx < primes.size() && primes[idx] <= kStage1Bound; ++idx) {
    std::uint64_t pk = primes[idx];
    while (pk * primes[idx] <= kStage1Bound) pk *= primes[idx];
    mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), pk, n.get_mpz_t());
    if (idx % 1024 == 0 && deadline.passed()) return 0;
  }
  Nat g;
  Nat a_minus_1 = a - 1;
  mpz_gcd(g.get_mpz_t(), a_minus_1.get_mpz_t(), n.get_mpz_t());
  if (g == n) return p_minus_1_backtrack(n, 1, deadline);
  if (g > 1) return g;

  // a^gap for every even gap between consecutive stage-2 primes.
  std::map<std::uint32_t, Nat> gap_powers;
  Nat b;
  mpz_powm_ui(b.get_mpz_t(), a.get_mpz_t(), primes[idx], n.get_mpz_t());
  Nat start_b = b;
  std::size_t start = idx;
  Nat acc = 1;
  auto advance = [&](Nat& value, std::size_t i) {
    const std::uint32_t gap = primes[i + 1] - primes[i];
    auto it = gap_powers.find(gap);
    if (it == gap_powers.end()) {
      Nat power;
      mpz_powm_ui(power.get_mpz_t(), a.get_mpz_t(), gap, n.get_mpz_t());
      it = gap_powers.emplace(gap, std::move(power)).first;
    }
    value = value * it->second % n;
  };
  for (std::size_t i = idx;; ++i) {
    acc = acc * (b - 1) % n;
    const bool last = i + 1 == primes.size();
    if ((i - idx) % 4096 == 4095 || last) {
      mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
      if (g > 1 && g < n) return g;
      if (g == n) {
        // Replay the batch one prime at a time to find the prime responsible.
        Nat c = start_b;
        for (std::size_t j = start; j <= i; ++j) {
          Nat c_minus_1 = c - 1;
          mpz_gcd(g.get_mpz_t(), c_minus_1.get_mpz_t(), n.get_mpz_t());
          if (g > 1 && g < n) return g;
          if (g == n) return p_minus_1_backtrack(n, primes[j], deadline);
          advance(c, j);
        }
        return 0;
      }
      if (deadline.passed()) return 0;
      acc = 1;
      start = i + 1;
      if (!last) {
        start_b = b;
        advance(start_b, i);
      }
    }
    if (last) break;
    advance(b, i);
  }
  return 0;
}

// A nontrivial divisor of composite n, or 0 when the budget ran out.
Nat find_divisor(const Nat& n, const Deadline& deadline) {
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    return Nat(static_cast<unsigned long>(rho_u64(n.get_ui(), deadline)));
  }
  if (Nat d = rho(n, 1, kShortRhoIterations, deadline); d > 1 && d < n) return d;
  if (deadline.passed()) return 0;
  if (Nat d = pollard_p_minus_1(n, deadline); d > 1 && d < n) return d;
  for (unsigned long increment = 2; !deadline.passed(); ++increment) {
    Nat d = rho(n, increment, UINT64_MAX, deadline);
    if (d > 1 && d < n) return d;
  }
  return 0;
}

}  // namespace

Factorization factorize(const Nat& n, Budget budget) {
  if (n < 1) throw DomainError("factorize needs n >= 1");
  const Deadline deadline(budget);

  std::map<Nat, PrimePower> found;
  auto record = [&](const Nat& p, unsigned multiplicity, bool probable) {
    auto [it, inserted] = found.try_emplace(p, PrimePower{p, 0, probable});
    it->second.exponent += multiplicity;
  };

  Nat rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    record(Nat(p), count, false);
  }

  Factorization result;
  std::vector<std::pair<Nat, unsigned>> pending;
  if (rest > 1) pending.emplace_back(rest, 1);
  while (!pending.empty()) {
    auto [c, multiplicity] = std::move(pending.back());
    pending.pop_back();
    if (const auto kind = classify_prime(c); kind != Primality::Composite) {
      record(c, multiplicity, kind == Primality::ProbablePrime);
      continue;
    }
    if (auto pp = perfect_power(c)) {
      pending.emplace_back(pp->base, multiplicity * pp->exponent);
      continue;
    }
    const Nat d = find_divisor(c, deadline);
    if (d == 0) {
      Nat power;
      mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), multiplicity);
      result.cofactor *= power;
      continue;
    }
    pending.emplace_back(c / d, multiplicity);
    pending.emplace_back(d, multiplicity);
  }

  for (auto& [p, pp] : found) result.factors.push_back(std::move(pp));
  return result;
}

}  // namespace pellphi::arith
