// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pellphi/arith.hpp"
#include "pellphi/modular.hpp"
#include "pellphi/repdigit.hpp"
#include "pellphi/sequences.hpp"
#include "pellphi/verifier.hpp"

using namespace pellphi;
using seq::SequenceKind;
using verify::Status;

namespace {

using Index = std::vector<std::uint64_t>;

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail.push_back(what);
    }
  }
};

std::set<Index> indices(const verify::VerificationReport& r) {
  std::set<Index> out;
  for (const auto& w : r.witnesses) out.insert(w.index);
  return out;
}

std::string show(const std::set<Index>& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& idx : s) {
    out << (first ? "" : ", ");
    first = false;
    if (idx.size() == 1) {
      out << idx[0];
      continue;
    }
    out << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
    out << ")";
  }
  return out.str() + "}";
}

std::string status_of(const verify::VerificationReport& r) {
  return r.claim_id + " is " + std::string(verify::to_string(r.status));
}

void check_status(Outcome& o, const verify::VerificationReport& r, Status want) {
  o.require(r.status == want, status_of(r));
  if (r.status != want) {
    for (const auto& w : r.witnesses) {
      o.detail.push_back("  witness " + show({w.index}) + " " + w.value + " " + w.note);
      if (o.detail.size() > 12) break;
    }
  }
}

void check_table(Outcome& o, SequenceKind kind, std::uint64_t k, std::uint64_t period,
                 const std::vector<std::uint64_t>& residues) {
  const auto t = modular::period_table(kind, k);
  o.require(t.period() == period, "mod " + std::to_string(k) + ": period " +
                                      std::to_string(t.period()) + ", expected " +
                                      std::to_string(period));
  o.require(t.residues == residues, "mod " + std::to_string(k) + ": residues differ");
}

Outcome table1() {
  Outcome o;
  check_table(o, SequenceKind::Pell, 11, 24,
              {0, 1, 2, 5, 1, 7, 4, 4, 1, 6, 2, 10, 0, 10, 9, 6, 10, 4, 7, 7, 10, 5, 9, 1});
  check_table(o, SequenceKind::Pell, 20, 12, {0, 1, 2, 5, 12, 9, 10, 9, 8, 5, 18, 1});
  check_table(o, SequenceKind::Pell, 40, 24,
              {0, 1, 2, 5, 12, 29, 30, 9, 8, 25, 18, 21, 20, 21, 22, 25, 32, 9, 10, 29, 28, 5,
               38, 1});
  check_status(o, verify::verify_period_tables(SequenceKind::Pell), Status::Verified);
  return o;
}

Outcome table2() {
  Outcome o;
  check_table(o, SequenceKind::AssocPell, 4, 4, {1, 1, 3, 3});
  check_table(o, SequenceKind::AssocPell, 5, 12, {1, 1, 3, 2, 2, 1, 4, 4, 2, 3, 3, 4});
  check_table(o, SequenceKind::AssocPell, 8, 4, {1, 1, 3, 7});
  check_table(o, SequenceKind::AssocPell, 20, 12, {1, 1, 3, 7, 17, 1, 19, 19, 17, 13, 3, 19});
  check_status(o, verify::verify_period_tables(SequenceKind::AssocPell), Status::Verified);
  return o;
}

Outcome identities() {
  Outcome o;
  check_status(o, verify::verify_identities(400), Status::Verified);
  // Spot checks against the recurrence, independent of the suite.
  const auto p = oracle::pell(400);
  const auto q = oracle::assoc_pell(400);
  for (std::uint64_t n = 1; n <= 400; ++n) {
    o.require(arith::v2(p[n]) == arith::v2(Nat(static_cast<unsigned long>(n))),
              "v2(P(" + std::to_string(n) + ")) != v2(" + std::to_string(n) + ")");
  }
  for (unsigned t = 0; t <= 7; ++t) {
    const std::uint64_t n = std::uint64_t{3} << t;
    o.require(q[n] % q[n / 3] == 0, "Q(" + std::to_string(n / 3) + ") does not divide Q(" +
                                        std::to_string(n) + ")");
  }
  return o;
}

Outcome perfect_powers() {
  Outcome o;
  const auto pell = verify::search_perfect_powers(SequenceKind::Pell, 200);
  const auto assoc = verify::search_perfect_powers(SequenceKind::AssocPell, 200);
  check_status(o, pell, Status::Verified);
  check_status(o, assoc, Status::Verified);
  o.require(indices(pell) == std::set<Index>{{7}}, "Pell hits " + show(indices(pell)));
  o.require(indices(assoc).empty(), "AssocPell hits " + show(indices(assoc)));
  return o;
}

std::set<Index> brute_square_pairs(const std::vector<Nat>& u) {
  std::set<Index> out;
  for (std::uint64_t m = 0; m < u.size(); ++m) {
    for (std::uint64_t n = m + 1; n < u.size(); ++n) {
      const Nat prod = u[m] * u[n];
      if (prod > 0 && arith::isqrt(prod).exact) out.insert({m, n});
    }
  }
  return out;
}

std::set<Index> as_set(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  std::set<Index> out;
  for (auto [m, n] : pairs) out.insert({m, n});
  return out;
}

Outcome product_squares() {
  Outcome o;
  std::set<Index> family;
  for (std::uint64_t m = 1; 3 * m <= 60; m += 2) {
    if (m % 3 != 0) family.insert({m, 3 * m});
  }
  std::set<Index> pell_family = family;
  pell_family.insert({1, 7});

  const auto pell = as_set(verify::product_square_pairs(SequenceKind::Pell, 60));
  const auto assoc = as_set(verify::product_square_pairs(SequenceKind::AssocPell, 60));
  o.require(pell == pell_family, "Pell pairs " + show(pell) + ", claimed " + show(pell_family));
  o.require(assoc == family, "AssocPell pairs " + show(assoc) + ", claimed " + show(family));

  o.require(as_set(verify::product_square_pairs(SequenceKind::Pell, 30)) ==
                brute_square_pairs(oracle::pell(30)),
            "Pell search disagrees with the isqrt scan at 30");
  o.require(as_set(verify::product_square_pairs(SequenceKind::AssocPell, 30)) ==
                brute_square_pairs(oracle::assoc_pell(30)),
            "AssocPell search disagrees with the isqrt scan at 30");
  return o;
}

Outcome four_p_m() {
  Outcome o;
  const auto r = verify::search_4pm(120);
  check_status(o, r, Status::Verified);
  o.require(indices(r) == std::set<Index>{{4, 3, 1}}, "hits " + show(indices(r)));
  return o;
}

Outcome primitive() {
  Outcome o;
  for (auto kind : {SequenceKind::Pell, SequenceKind::AssocPell}) {
    const auto r = verify::verify_primitive_congruence(kind, 100);
    check_status(o, r, Status::Verified);
    o.require(r.unresolved.empty(), std::string(seq::name(kind)) + " has unresolved indices");
    std::set<Index> expected;
    for (std::uint64_t n = kind == SequenceKind::Pell ? 3 : 2; n <= 100; ++n) expected.insert({n});
    o.require(indices(r) == expected, std::string(seq::name(kind)) + " covers " + show(indices(r)));
  }
  return o;
}

Outcome one_mod_4() {
  Outcome o;
  const auto r = verify::verify_1mod4_factor(120);
  check_status(o, r, Status::Verified);
  std::set<Index> expected;
  for (std::uint64_t n = 0; n <= 120; ++n) {
    if (n != 0 && n != 1 && n != 2 && n != 4 && n != 14) expected.insert({n});
  }
  std::set<Index> found;
  for (const auto& w : r.witnesses) {
    if (arith::is_prime(Nat(w.value)) && Nat(w.value) % 4 == 1) found.insert(w.index);
  }
  o.require(found == expected, "indices with a 1 mod 4 witness: " + show(found));
  return o;
}

Outcome q_powers_of_two() {
  Outcome o;
  const auto f = verify::factor_term(SequenceKind::AssocPell, 32);
  o.require(f.complete() && f.factors.size() == 3, "Q(32) did not split into three primes");
  if (f.factors.size() == 3) {
    const std::vector<Nat> expected{257, 1409, 2448769};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& pp = f.factors[i];
      o.require(pp.prime == expected[i] && pp.exponent == 1,
                "Q(32) factor " + pp.prime.get_str());
      o.require(oracle::is_prime(pp.prime.get_ui()), pp.prime.get_str() + " is not prime");
      o.require(pp.prime % 16 == 1, pp.prime.get_str() + " is not 1 mod 16");
    }
  }
  o.require(Nat(257) * 1409 * 2448769 == seq::term(SequenceKind::AssocPell, 32),
            "257 * 1409 * 2448769 != Q(32)");
  const auto q = oracle::assoc_pell(32);
  for (unsigned t = 2; t <= 4; ++t) {
    o.require(q[1u << t] % 16 == 1, "Q(2^" + std::to_string(t) + ") is not 1 mod 16");
  }
  for (unsigned t = 1; t <= 5; ++t) {
    const Nat r = q[1u << t] % 5;
    o.require(r == 2 || r == 3, "Q(2^" + std::to_string(t) + ") mod 5 = " + r.get_str());
  }
  return o;
}

Outcome repdigit_totients() {
  Outcome o;
  const auto pell = verify::search_repdigit_totients(SequenceKind::Pell, 60, 2);
  check_status(o, pell, Status::Verified);
  o.require(pell.witnesses.empty(), "Pell hits " + show(indices(pell)));
  o.require(pell.unresolved.empty(), "Pell has unresolved indices");
  const auto assoc = verify::search_repdigit_totients(SequenceKind::AssocPell, 60, 1);
  check_status(o, assoc, Status::Verified);
  o.require(indices(assoc) == std::set<Index>{{0}, {1}, {2}, {3}},
            "AssocPell hits " + show(indices(assoc)));
  const Nat phi18 = arith::totient(arith::factorize(seq::term(SequenceKind::AssocPell, 18)));
  o.require(!oracle::digits_all_equal(phi18.get_ui()), "phi(Q(18)) is a repdigit");
  o.require(!repdigit::as_repdigit(phi18), "as_repdigit accepts phi(Q(18))");
  return o;
}

Outcome theorem31_replay() {
  Outcome o;
  const auto trace = verify::replay_theorem31_cases();
  for (const auto& step : trace.steps) {
    o.require(step.match, step.description + ": computed " + step.computed + ", stated " +
                              step.expected);
  }
  o.require(!trace.steps.empty(), "empty trace");
  return o;
}

Outcome eq33() {
  Outcome o;
  check_status(o, verify::verify_eq33(500), Status::Verified);
  const auto sub = verify::eq33_subtrace();
  o.require(sub.passes(), "sub-trace mismatch");
  o.require(modular::power_residue_set(10, 11).members == std::vector<std::uint64_t>{1, 10},
            "10^m mod 11");
  // Direct scan of 9 P(n) - 1 against 8 * 10^m.
  const auto p = oracle::pell(500);
  for (std::uint64_t n = 0; n <= 500; ++n) {
    const Nat lhs = 9 * p[n] - 1;
    Nat rhs = 80;
    while (rhs < lhs) rhs *= 10;
    o.require(rhs != lhs, "9 P(" + std::to_string(n) + ") - 1 is 8 * 10^m");
  }
  std::set<std::uint64_t> eight_pow;
  std::uint64_t x = 8 * 10 % 11;
  for (int m = 1; m <= 40; ++m, x = x * 10 % 11) eight_pow.insert(x);
  o.require(eight_pow == std::set<std::uint64_t>{3, 8}, "8 * 10^m mod 11 by direct scan");
  o.require((9 * 4 - 1) % 11 == 2, "target residue");
  return o;
}

Outcome section4() {
  Outcome o;
  check_status(o, verify::verify_section4_structure(80), Status::Verified);
  // Recheck the three invariants from the cached factorizations.
  for (std::uint64_t n = 1; n <= 80; n += 2) {
    const auto fq = verify::factor_term(SequenceKind::AssocPell, n);
    const auto fp = verify::factor_term(SequenceKind::Pell, n);
    o.require(fq.complete() && fp.complete(), "incomplete at n = " + std::to_string(n));
    for (const auto& pp : fq.factors) {
      const Nat r = pp.prime % 8;
      o.require(r == 1 || r == 7, "prime " + pp.prime.get_str() + " of Q(" + std::to_string(n) +
                                      ") is not +-1 mod 8");
    }
    for (const auto& pp : fp.factors) {
      o.require(pp.prime % 4 == 1, "prime " + pp.prime.get_str() + " of P(" +
                                       std::to_string(n) + ") is not 1 mod 4");
    }
    if (n > 1) {
      unsigned distinct = 0;
      for (const auto& pp : fq.factors) distinct += arith::v2(pp.prime - 1);
      o.require(arith::v2(arith::totient(fq)) == distinct,
                "v2(phi(Q(" + std::to_string(n) + "))) mismatch");
    }
  }
  return o;
}

Outcome totient_bound() {
  Outcome o;
  const auto r = verify::verify_totient_bound(1'000'000);
  check_status(o, r, Status::Verified);
  const auto phi = verify::totient_sieve(10);
  for (std::uint64_t n : {1, 2, 6}) {
    o.require(3 * phi[n] * phi[n] < 4 * n, std::to_string(n) + " is not a genuine failure");
  }
  return o;
}

Outcome oracles() {
  Outcome o;
  constexpr std::uint64_t kMax = 1'000'000;
  std::vector<std::uint32_t> spf(kMax + 1, 0);
  for (std::uint64_t i = 2; i <= kMax; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= kMax; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::uint64_t bad = 0;
  for (std::uint64_t n = 2; n <= kMax; ++n) {
    std::map<std::uint64_t, unsigned> expected;
    for (std::uint64_t m = n; m > 1; m /= spf[m]) ++expected[spf[m]];
    const auto f = arith::factorize(Nat(static_cast<unsigned long>(n)));
    std::map<std::uint64_t, unsigned> got;
    for (const auto& pp : f.factors) got[pp.prime.get_ui()] = pp.exponent;
    if (!f.complete() || got != expected) {
      if (++bad <= 5) o.require(false, "factorize(" + std::to_string(n) + ") disagrees");
    }
  }
  o.require(arith::factorize(Nat(1)).factors.empty(), "factorize(1) is not empty");
  for (std::uint64_t p = 3; p <= 1000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (oracle::is_square_mod(a, p) ? 1 : -1);
      if (arith::jacobi(Nat(static_cast<unsigned long>(a)), Nat(static_cast<unsigned long>(p))) !=
          expected) {
        if (++bad <= 10) o.require(false, "jacobi(" + std::to_string(a) + ", " +
                                              std::to_string(p) + ") disagrees");
      }
    }
  }
  for (std::uint64_t n = 0; n <= kMax; ++n) {
    if (repdigit::as_repdigit(Nat(static_cast<unsigned long>(n))).has_value() !=
        oracle::digits_all_equal(n)) {
      if (++bad <= 15) o.require(false, "as_repdigit(" + std::to_string(n) + ") disagrees");
    }
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Pell period tables mod 11, 20, 40", 1.0, table1},
      {2, "AssocPell period tables mod 4, 5, 8, 20", 1.0, table2},
      {3, "identity suite for n <= 400", 30.0, identities},
      {4, "perfect powers for n <= 200", 120.0, perfect_powers},
      {5, "product-square families for n <= 60", 0.0, product_squares},
      {6, "P(n) = 4 p^m for n <= 120", 0.0, four_p_m},
      {7, "primitive factors = +-1 mod n for n <= 100", 0.0, primitive},
      {8, "prime factor = 1 mod 4 for n <= 120", 0.0, one_mod_4},
      {9, "Q(2^t) factorization and residues", 0.0, q_powers_of_two},
      {10, "repdigit totients for n <= 60", 300.0, repdigit_totients},
      {11, "residue case analysis replay", 0.0, theorem31_replay},
      {12, "9 P(n) - 1 = 8 * 10^m for n <= 500", 5.0, eq33},
      {13, "odd-index factor structure for n <= 80", 0.0, section4},
      {14, "3 phi(n)^2 >= 4n for n <= 1e6 outside {1, 2, 6}", 10.0, totient_bound},
      {15, "oracle equivalences", 0.0, oracles},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    verify::clear_term_cache();
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.require(false, "took " + std::to_string(seconds) + " s, limit " +
                           std::to_string(c.limit_seconds) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d  %s  (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                seconds);
    for (const auto& line : o.detail) std::printf("          %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
