#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "common.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::verify {

namespace {

using arith::Factorization;
using seq::SequenceKind;

class TermCache {
 public:
  bool lookup(SequenceKind kind, std::uint64_t n, Factorization& out) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({kind, n});
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
  }
  // Only complete factorizations are stored, so a key always maps to the
  // same value whichever thread inserted it.
  void store(SequenceKind kind, std::uint64_t n, const Factorization& f) {
    if (!f.complete()) return;
    std::lock_guard lock(mutex_);
    entries_.try_emplace({kind, n}, f);
  }
  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<SequenceKind, std::uint64_t>, Factorization> entries_;
};

TermCache& cache() {
  static TermCache instance;
  return instance;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Strips every known prime from value, then factors what is left.
Factorization factor_with_seeds(const Nat& value, const std::set<Nat>& seeds,
                                const RunOptions& options) {
  Factorization known;
  Nat rest = value;
  for (const Nat& p : seeds) {
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++count;
    }
    if (count > 0) {
      known.factors.push_back({p, count, arith::classify_prime(p) ==
                                             arith::Primality::ProbablePrime});
    }
  }
  if (rest == 1) return known;
  return arith::merge(known, arith::factorize(rest, options.budget));
}

void collect_primes(const Factorization& f, std::set<Nat>& into) {
  for (const auto& pp : f.factors) into.insert(pp.prime);
}

Factorization compute(SequenceKind kind, std::uint64_t n, const RunOptions& options) {
  switch (kind) {
    case SequenceKind::Pell: {
      if (n == 0) throw arith::DomainError("P(0) = 0 has no factorization");
      if (n <= 2) return arith::factorize(seq::term(kind, n), options.budget);
      if (n % 2 == 0) {
        // P(2k) = 2 P(k) Q(k)
        Factorization two;
        two.factors.push_back({Nat(2), 1, false});
        return arith::merge(two, arith::merge(factor_term(SequenceKind::Pell, n / 2, options),
                                              factor_term(SequenceKind::AssocPell, n / 2,
                                                          options)));
      }
      std::set<Nat> seeds;
      for (std::uint64_t q : prime_divisors(n)) {
        if (q < n) collect_primes(factor_term(SequenceKind::Pell, n / q, options), seeds);
      }
      return factor_with_seeds(seq::term(kind, n), seeds, options);
    }
    case SequenceKind::AssocPell: {
      // Q(d) | Q(n) whenever n / d is odd.
      std::set<Nat> seeds;
      for (std::uint64_t q : prime_divisors(n)) {
        if (q != 2 && q < n) {
          collect_primes(factor_term(SequenceKind::AssocPell, n / q, options), seeds);
        }
      }
      return factor_with_seeds(seq::term(kind, n), seeds, options);
    }
    case SequenceKind::Balancing: {
      if (n == 0) throw arith::DomainError("B(0) = 0 has no factorization");
      // B(n) = P(2n) / 2
      Factorization f = factor_term(SequenceKind::Pell, 2 * n, options);
      auto two = f.factors.begin();
      if (--two->exponent == 0) f.factors.erase(two);
      return f;
    }
  }
  throw std::invalid_argument("unknown sequence kind");
}

}  // namespace

Factorization factor_term(SequenceKind kind, std::uint64_t n, const RunOptions& options) {
  Factorization f;
  if (cache().lookup(kind, n, f)) return f;
  f = compute(kind, n, options);
  if (f.value() != seq::term(kind, n)) {
    throw std::logic_error("term factorization does not multiply back at index " +
                           std::to_string(n));
  }
  cache().store(kind, n, f);
  return f;
}

void clear_term_cache() { cache().clear(); }

}  // namespace pellphi::verify
