#include "common.hpp"
#include "pellphi/repdigit.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::verify {

namespace {

using seq::SequenceKind;

unsigned long mod(const Nat& x, unsigned long k) { return mpz_fdiv_ui(x.get_mpz_t(), k); }

}  // namespace

VerificationReport verify_section4_structure(std::uint64_t n_max, const RunOptions& options) {
  if (n_max < 3) throw arith::DomainError("verify_section4_structure needs n_max >= 3");
  detail::Stopwatch clock;
  VerificationReport report;
  report.claim_id = "theorem-4.2";
  report.params["max_n"] = std::to_string(n_max);
  bool failed = false;
  auto fail = [&](std::vector<std::uint64_t> index, std::string value, std::string note) {
    failed = true;
    report.witnesses.push_back({std::move(index), std::move(value), std::move(note)});
  };

  struct Slot {
    arith::Factorization p;
    arith::Factorization q;
  };
  std::vector<Slot> slots(n_max + 1);
  detail::parallel_for(0, (n_max - 1) / 2, options.jobs, [&](std::uint64_t i) {
    const std::uint64_t n = 2 * i + 1;
    slots[n] = {factor_term(SequenceKind::Pell, n, options),
                factor_term(SequenceKind::AssocPell, n, options)};
  });

  std::size_t checked_a = 0, checked_b = 0, checked_c = 0;
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    const auto& [fp, fq] = slots[n];
    if (!fp.complete() || !fq.complete()) report.unresolved.push_back(n);

    // (a) 2 is a square mod every p | Q(n) since Q(n)^2 - 2 P(n)^2 = -1.
    for (const auto& pp : fq.factors) {
      const auto r = mod(pp.prime, 8);
      ++checked_a;
      if (r != 1 && r != 7) fail({n}, pp.prime.get_str(), "(a) prime of Q(n) not +-1 mod 8");
    }
    // (b) -1 is a square mod every odd p | P(n).
    for (const auto& pp : fp.factors) {
      ++checked_b;
      if (pp.prime != 2 && mod(pp.prime, 4) != 1) {
        fail({n}, pp.prime.get_str(), "(b) odd prime of P(n) not 1 mod 4");
      }
    }
    // (c) v2(phi(Q(n))) = sum v2(p - 1).
    if (fq.complete()) {
      ++checked_c;
      unsigned sum = 0;
      for (const auto& pp : fq.factors) sum += arith::v2(pp.prime - 1);
      const unsigned lhs = arith::v2(arith::totient(fq));
      if (lhs != sum) {
        fail({n}, std::to_string(lhs), "(c) v2(phi(Q(n))) != sum v2(p - 1) = " +
                                           std::to_string(sum));
      }
    }
  }
  report.notes.push_back("(a) primes checked: " + std::to_string(checked_a) +
                         ", (b) primes checked: " + std::to_string(checked_b) +
                         ", (c) indices checked: " + std::to_string(checked_c));

  // (d) Q(2^t) = 1 (mod 16) for t = 2, 3, 4, and Q(32)'s factors.
  for (std::uint64_t t : {2, 3, 4}) {
    const Nat q = seq::term(SequenceKind::AssocPell, std::uint64_t{1} << t);
    if (mod(q, 16) != 1) fail({t}, q.get_str(), "(d) Q(2^t) != 1 (mod 16)");
    report.notes.push_back("(d) Q(" + std::to_string(1u << t) + ") = " + q.get_str() +
                           (arith::is_prime(q) ? " is prime" : " is composite") + ", " +
                           std::to_string(mod(q, 16)) + " mod 16");
  }
  const auto q32 = factor_term(SequenceKind::AssocPell, 32, options);
  std::vector<Nat> q32_primes;
  for (const auto& pp : q32.factors) {
    q32_primes.push_back(pp.prime);
    if (mod(pp.prime, 16) != 1 || pp.exponent != 1) {
      fail({5}, pp.prime.get_str(), "(d) factor of Q(32) not simple or not 1 mod 16");
    }
  }
  if (!q32.complete()) report.unresolved.push_back(32);
  report.notes.push_back("(d) Q(32) = " + detail::join(q32_primes, " * "));

  // (e) Q(2^t) mod 5 in {2, 3} for 1 <= t <= 5.
  for (std::uint64_t t = 1; t <= 5; ++t) {
    const Nat q = seq::term(SequenceKind::AssocPell, std::uint64_t{1} << t);
    const auto r = mod(q, 5);
    if (r != 2 && r != 3) fail({t}, q.get_str(), "(e) Q(2^t) mod 5 not in {2, 3}");
  }

  // (f) phi(Q(18)) is not a repdigit.
  const auto q18 = factor_term(SequenceKind::AssocPell, 18, options);
  if (q18.complete()) {
    const Nat phi = arith::totient(q18);
    if (repdigit::as_repdigit(phi)) fail({18}, phi.get_str(), "(f) phi(Q(18)) is a repdigit");
    report.notes.push_back("(f) phi(Q(18)) = " + phi.get_str());
  } else {
    report.unresolved.push_back(18);
  }

  finalize(report, failed);
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace pellphi::verify
