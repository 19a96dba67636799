#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pellphi/arith.hpp"
#include "pellphi/modular.hpp"
#include "pellphi/verifier.hpp"

using namespace pellphi;
using seq::SequenceKind;
using verify::Status;

namespace {

std::set<std::vector<std::uint64_t>> indices(const verify::VerificationReport& r) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& w : r.witnesses) out.insert(w.index);
  return out;
}

}  // namespace

TEST_CASE("finalize precedence") {
  verify::VerificationReport r;
  verify::finalize(r, false);
  CHECK(r.status == Status::Verified);
  r.unresolved = {9};
  verify::finalize(r, false);
  CHECK(r.status == Status::Unresolved);
  verify::finalize(r, true);
  CHECK(r.status == Status::Counterexample);
}

TEST_CASE("status strings round-trip") {
  for (auto s : {Status::Verified, Status::Counterexample, Status::Unresolved}) {
    CHECK(verify::parse_status(verify::to_string(s)) == s);
  }
}

TEST_CASE("identities hold on true sequences") {
  const auto r = verify::verify_identities(120);
  CHECK(r.status == Status::Verified);
  CHECK(r.witnesses.empty());
}

TEST_CASE("identities catch a mutated sequence") {
  verify::IdentityInputs inputs{oracle::pell(60), oracle::recurrence(0, 1, 2, 1, 60)};
  const auto r = verify::verify_identities(inputs);
  CHECK(r.status == Status::Counterexample);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().index.front() <= 2);
}

TEST_CASE("balancing link") {
  CHECK(verify::verify_balancing_link(200).status == Status::Verified);
}

TEST_CASE("term factorizations are complete and exact") {
  verify::clear_term_cache();
  for (auto kind : {SequenceKind::Pell, SequenceKind::AssocPell}) {
    for (std::uint64_t n = 1; n <= 70; ++n) {
      const auto f = verify::factor_term(kind, n);
      REQUIRE(f.complete());
      REQUIRE(f.value() == seq::term(kind, n));
    }
  }
  const auto q32 = verify::factor_term(SequenceKind::AssocPell, 32);
  REQUIRE(q32.factors.size() == 3);
  CHECK(q32.factors[0].prime == 257);
  CHECK(q32.factors[1].prime == 1409);
  CHECK(q32.factors[2].prime == 2448769);
}

TEST_CASE("perfect powers among small terms agree with exhaustive root tests") {
  for (auto kind : {SequenceKind::Pell, SequenceKind::AssocPell}) {
    const auto r = verify::search_perfect_powers(kind, 40);
    std::set<std::vector<std::uint64_t>> expected;
    const auto u = kind == SequenceKind::Pell ? oracle::pell(40) : oracle::assoc_pell(40);
    for (std::uint64_t n = 2; n <= 40; ++n) {
      for (unsigned k = 2; k < 70; ++k) {
        if (arith::iroot(u[n], k).exact && u[n] > 1) {
          expected.insert({n});
          break;
        }
      }
    }
    CHECK(indices(r) == expected);
  }
}

TEST_CASE("product squares agree with a brute isqrt scan") {
  for (auto kind : {SequenceKind::Pell, SequenceKind::AssocPell}) {
    const auto u = kind == SequenceKind::Pell ? oracle::pell(30) : oracle::assoc_pell(30);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
    for (std::uint64_t m = 0; m <= 30; ++m) {
      for (std::uint64_t n = m + 1; n <= 30; ++n) {
        const Nat prod = u[m] * u[n];
        if (prod > 0 && arith::isqrt(prod).exact) expected.emplace_back(m, n);
      }
    }
    CHECK(verify::product_square_pairs(kind, 30) == expected);
  }
}

TEST_CASE("4 p^m search") {
  const auto r = verify::search_4pm(120);
  CHECK(r.status == Status::Verified);
  CHECK(indices(r) == std::set<std::vector<std::uint64_t>>{{4, 3, 1}});
}

TEST_CASE("primitive factors agree with direct divisibility") {
  const auto u = oracle::pell(40);
  for (std::uint64_t n = 3; n <= 40; ++n) {
    const auto prim = verify::primitive_factors(SequenceKind::Pell, n);
    for (const auto& pp : arith::factorize(u[n]).factors) {
      bool earlier = false;
      for (std::uint64_t k = 1; k < n; ++k) earlier |= mpz_divisible_p(u[k].get_mpz_t(), pp.prime.get_mpz_t()) != 0;
      const bool listed = std::find(prim.begin(), prim.end(), pp.prime) != prim.end();
      REQUIRE(listed == !earlier);
    }
  }
}

TEST_CASE("primitive congruence on a small range") {
  auto r = verify::verify_primitive_congruence(SequenceKind::Pell, 40);
  CHECK(r.status == Status::Verified);
  r = verify::verify_primitive_congruence(SequenceKind::AssocPell, 40);
  CHECK(r.status == Status::Verified);
}

TEST_CASE("totient sieve agrees with coprime counting") {
  const auto phi = verify::totient_sieve(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(phi[n] == oracle::coprime_count(n));
}

TEST_CASE("totient bound violations on a small range") {
  const auto r = verify::verify_totient_bound(1000);
  std::set<std::vector<std::uint64_t>> expected;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto phi = oracle::coprime_count(n);
    if (3 * phi * phi < 4 * n && n != 1 && n != 2 && n != 6) expected.insert({n});
  }
  CHECK(indices(r) == expected);
}

TEST_CASE("prime-index structure") {
  CHECK(verify::verify_prime_index_structure(60).status == Status::Verified);
}

TEST_CASE("repdigit totients on a small range") {
  auto r = verify::search_repdigit_totients(SequenceKind::AssocPell, 30, 1);
  CHECK(r.status == Status::Verified);
  CHECK(indices(r) == std::set<std::vector<std::uint64_t>>{{0}, {1}, {2}, {3}});
  r = verify::search_repdigit_totients(SequenceKind::Pell, 30, 2);
  CHECK(r.status == Status::Verified);
  CHECK(r.witnesses.empty());
}

TEST_CASE("repdigit totient search with a zero budget is unresolved, not wrong") {
  verify::clear_term_cache();
  const auto r = verify::search_repdigit_totients(SequenceKind::Pell, 100, 2,
                                                  {arith::Budget(0.0), 1});
  CHECK(r.status != Status::Counterexample);
  verify::clear_term_cache();
}

TEST_CASE("period tables match the golden rows") {
  CHECK(verify::verify_period_tables(SequenceKind::Pell).status == Status::Verified);
  CHECK(verify::verify_period_tables(SequenceKind::AssocPell).status == Status::Verified);
  for (const auto& row : verify::pell_table_rows()) {
    CHECK(oracle::brute_period(0, 1, row.modulus) == row.residues);
  }
  for (const auto& row : verify::assoc_pell_table_rows()) {
    CHECK(oracle::brute_period(1, 1, row.modulus) == row.residues);
  }
}

TEST_CASE("9 P(n) - 1 against 8 * 10^m") {
  CHECK(verify::eq33_subtrace().passes());
  CHECK(verify::verify_eq33(200).status == Status::Verified);
}

TEST_CASE("odd-index factor structure, serial and parallel") {
  const auto serial = verify::verify_section4_structure(40, {arith::kDefaultBudget, 1});
  const auto parallel = verify::verify_section4_structure(40, {arith::kDefaultBudget, 4});
  CHECK(serial.status == Status::Verified);
  CHECK(serial.witnesses == parallel.witnesses);
  CHECK(serial.notes == parallel.notes);
}

TEST_CASE("merge_reports prefixes parts") {
  verify::VerificationReport a{.claim_id = "a"};
  a.unresolved = {5};
  verify::finalize(a, false);
  verify::VerificationReport b{.claim_id = "b"};
  b.witnesses.push_back({{3}, "7", "x"});
  verify::finalize(b, true);
  const auto m = verify::merge_reports("ab", {a, b});
  CHECK(m.claim_id == "ab");
  CHECK(m.status == Status::Counterexample);
  REQUIRE(m.witnesses.size() == 1);
  CHECK(m.witnesses[0].note == "b.x");
}
