#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pellphi/arith.hpp"
#include "pellphi/modular.hpp"
#include "pellphi/nat.hpp"
#include "pellphi/sequences.hpp"

namespace pellphi::verify {

enum class Status { Verified, Counterexample, Unresolved };

std::string_view to_string(Status status);
Status parse_status(std::string_view text);

struct Witness {
  std::vector<std::uint64_t> index;  // a single index or a tuple
  std::string value;                 // decimal, values outgrow native widths
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Status invariants: Counterexample carries witnesses, Verified carries no
// unresolved indices. Witnesses and unresolved indices are kept sorted.
struct VerificationReport {
  std::string claim_id;
  std::map<std::string, std::string> params;
  Status status = Status::Verified;
  std::vector<Witness> witnesses;
  std::vector<std::uint64_t> unresolved;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{0.0};

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct TraceStep {
  std::string description;
  std::string computed;
  std::string expected;
  bool match = false;
};

struct ProofTrace {
  std::vector<TraceStep> steps;

  bool passes() const;
};

struct RunOptions {
  arith::Budget budget = arith::kDefaultBudget;  // per index
  unsigned jobs = 1;
};

/// Sorts witnesses and unresolved indices and derives the status:
/// Counterexample beats Unresolved beats Verified.
void finalize(VerificationReport& report, bool counterexample);

/// A failing trace becomes a Counterexample whose witnesses are the
/// mismatched steps.
VerificationReport report_from_trace(std::string claim_id, const ProofTrace& trace);

/// Combines reports for one claim; statuses combine as in finalize.
VerificationReport merge_reports(std::string claim_id,
                                 const std::vector<VerificationReport>& parts);

/// Factorization of u(n) split along the divisibility structure of the
/// sequence before falling back to arith::factorize. Complete results are
/// cached process-wide. P(0) = 0 has no factorization (DomainError).
arith::Factorization factor_term(seq::SequenceKind kind, std::uint64_t n,
                                 const RunOptions& options = {});
void clear_term_cache();

// ---- Identity suite ----

struct IdentityInputs {
  std::vector<Nat> pell;        // P(0..N)
  std::vector<Nat> assoc_pell;  // Q(0..N)
};

/// Builds the true sequences and also checks recurrence against doubling.
VerificationReport verify_identities(std::uint64_t n_max);
/// Checks the nine identities over whatever tables it is given.
VerificationReport verify_identities(const IdentityInputs& inputs);

VerificationReport verify_balancing_link(std::uint64_t n_max);

// ---- Bounded Diophantine searches ----

VerificationReport search_perfect_powers(seq::SequenceKind kind, std::uint64_t n_max);

/// Pairs m < n <= n_max with u(m) u(n) a square (m >= 1 for Pell, m >= 0
/// for AssocPell), by isqrt.
std::vector<std::pair<std::uint64_t, std::uint64_t>> product_square_pairs(
    seq::SequenceKind kind, std::uint64_t n_max);
VerificationReport search_product_squares(seq::SequenceKind kind, std::uint64_t n_max);

VerificationReport search_4pm(std::uint64_t n_max);

// ---- Prime factor structure ----

/// Primes dividing u(n) and no u(k), 1 <= k < n. Throws
/// arith::IncompleteFactorization if u(n) does not factor within budget.
std::vector<Nat> primitive_factors(seq::SequenceKind kind, std::uint64_t n,
                                   const RunOptions& options = {});
VerificationReport verify_primitive_congruence(seq::SequenceKind kind, std::uint64_t n_max,
                                               const RunOptions& options = {});
VerificationReport verify_1mod4_factor(std::uint64_t n_max, const RunOptions& options = {});
VerificationReport verify_prime_index_structure(std::uint64_t n_max);
VerificationReport verify_totient_bound(std::uint64_t n_max);

/// Euler phi for 0..n_max by a linear sieve.
std::vector<std::uint64_t> totient_sieve(std::uint64_t n_max);

// ---- Repdigit totients ----

VerificationReport search_repdigit_totients(seq::SequenceKind kind, std::uint64_t n_max,
                                            unsigned min_m, const RunOptions& options = {});
VerificationReport verify_eq33(std::uint64_t n_max);
ProofTrace eq33_subtrace();
ProofTrace replay_theorem31_cases();
VerificationReport verify_section4_structure(std::uint64_t n_max,
                                             const RunOptions& options = {});

// ---- Tables ----

struct TableRow {
  std::uint64_t modulus;
  std::vector<std::uint64_t> residues;
};

/// Reference rows: Pell mod 11, 20, 40 and associated Pell mod 4, 5, 8, 20.
const std::vector<TableRow>& pell_table_rows();
const std::vector<TableRow>& assoc_pell_table_rows();

VerificationReport verify_period_tables(seq::SequenceKind kind);

}  // namespace pellphi::verify
