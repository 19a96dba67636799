#include "common.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::verify {

namespace {

// Smallest k >= 1 with p | u(k), scanning u(k) mod p up to `limit`;
// 0 when p divides none of them.
std::uint64_t first_index_divisible(seq::SequenceKind kind, const Nat& p, std::uint64_t limit) {
  Nat a = kind == seq::SequenceKind::AssocPell ? 1 : 0;
  Nat b = 1;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (b == 0) return k;
    Nat next = (2 * b + a) % p;
    a = std::move(b);
    b = std::move(next);
  }
  return 0;
}

}  // namespace

std::vector<Nat> primitive_factors(seq::SequenceKind kind, std::uint64_t n,
                                   const RunOptions& options) {
  if (kind == seq::SequenceKind::Balancing) {
    throw arith::DomainError("primitive factors defined for pell and assoc-pell only");
  }
  if (n < 1) throw arith::DomainError("primitive_factors needs n >= 1");
  const auto f = factor_term(kind, n, options);
  if (!f.complete()) {
    throw arith::IncompleteFactorization(std::string(seq::name(kind)) + " term " +
                                         std::to_string(n) + " did not factor within budget");
  }
  std::vector<Nat> out;
  for (const auto& pp : f.factors) {
    if (first_index_divisible(kind, pp.prime, n - 1) == 0) out.push_back(pp.prime);
  }
  return out;
}

VerificationReport verify_primitive_congruence(seq::SequenceKind kind, std::uint64_t n_max,
                                               const RunOptions& options) {
  if (n_max < 3) throw arith::DomainError("verify_primitive_congruence needs n_max >= 3");
  detail::Stopwatch clock;
  VerificationReport report;
  report.claim_id = "lemma-2.7";
  report.params["kind"] = detail::kind_param(kind);
  report.params["max_n"] = std::to_string(n_max);

  const std::uint64_t first = kind == seq::SequenceKind::Pell ? 3 : 2;
  report.params["min_n"] = std::to_string(first);
  struct Slot {
    bool resolved = false;
    std::vector<Nat> primes;
  };
  std::vector<Slot> slots(n_max + 1);
  detail::parallel_for(first, n_max, options.jobs, [&](std::uint64_t n) {
    try {
      slots[n] = {true, primitive_factors(kind, n, options)};
    } catch (const arith::IncompleteFactorization&) {
      slots[n].resolved = false;
    }
  });

  bool failed = false;
  for (std::uint64_t n = first; n <= n_max; ++n) {
    const auto& slot = slots[n];
    if (!slot.resolved) {
      report.unresolved.push_back(n);
      continue;
    }
    std::string note;
    if (slot.primes.empty()) {
      failed = true;
      note = "no primitive prime factor";
    }
    for (const Nat& p : slot.primes) {
      const unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), n);
      if (r != 1 % n && r != n - 1) {
        failed = true;
        note += (note.empty() ? "" : "; ") + p.get_str() + " is " + std::to_string(r) +
                " mod n, not +-1";
      }
    }
    if (note.empty()) note = "all +-1 mod n";
    report.witnesses.push_back({{n}, detail::join(slot.primes, " "), note});
  }
  finalize(report, failed);
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace pellphi::verify
