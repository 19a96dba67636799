#include <algorithm>
#include <array>
#include <set>

#include "common.hpp"
#include "pellphi/modular.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::verify {

namespace {

using seq::SequenceKind;
using Set = std::vector<std::uint64_t>;

TraceStep compare(std::string description, const Set& computed, const Set& expected) {
  return {std::move(description), detail::set_text(computed), detail::set_text(expected),
          computed == expected};
}

Set sorted(std::set<std::uint64_t> s) { return {s.begin(), s.end()}; }

// Coefficients (highest first, reduced mod k) of the discriminant
// (P/2 + 1 - d R)^2 - 2P as a polynomial in P, where R = (10^m - 1)/9 is
// replaced by its residue 9^-1 ((-1)^m - 1).
std::array<std::int64_t, 3> discriminant_poly(std::uint64_t k, std::int64_t digit, bool m_even) {
  const auto m = static_cast<std::int64_t>(k);
  auto red = [m](std::int64_t x) { return ((x % m) + m) % m; };
  const std::int64_t half = static_cast<std::int64_t>(arith::mod_inverse(2, k));
  const std::int64_t ninth = static_cast<std::int64_t>(arith::mod_inverse(9, k));
  const std::int64_t repunit = red(ninth * ((m_even ? 1 : -1) - 1));
  const std::int64_t c = red(1 - digit * repunit);
  // (half P + c)^2 - 2P = half^2 P^2 + (2 half c - 2) P + c^2
  return {red(half * half), red(2 * half * c - 2), red(c * c)};
}

std::string coeff_text(const std::array<std::int64_t, 3>& c) {
  return "[" + detail::join(c) + "]";
}

}  // namespace

ProofTrace replay_theorem31_cases() {
  constexpr std::uint64_t k = 11;
  ProofTrace trace;

  const std::array<std::int64_t, 3> even_poly = {3, -1, 1};
  const std::array<std::int64_t, 3> odd_poly = {3, 2, 5};
  auto reduced = [](std::array<std::int64_t, 3> c) {
    for (auto& x : c) x = ((x % 11) + 11) % 11;
    return c;
  };
  const auto even_derived = discriminant_poly(k, 8, true);
  const auto odd_derived = discriminant_poly(k, 8, false);
  trace.steps.push_back({"discriminant mod 11 for even m reduces to 3P^2 - P + 1",
                         coeff_text(even_derived), coeff_text(reduced(even_poly)),
                         even_derived == reduced(even_poly)});
  trace.steps.push_back({"discriminant mod 11 for odd m reduces to 3P^2 + 2P + 5",
                         coeff_text(odd_derived), coeff_text(reduced(odd_poly)),
                         odd_derived == reduced(odd_poly)});

  // (1), (2)
  trace.steps.push_back(compare("residues r mod 11 with 3r^2 - r + 1 a square",
                                modular::poly_qr_filter(even_poly, k).members, {0, 4, 6, 9}));
  trace.steps.push_back(compare("residues r mod 11 with 3r^2 + 2r + 5 a square",
                                modular::poly_qr_filter(odd_poly, k).members, {6, 7}));

  // (3) preimages mod 24, (4) even ones halved to classes mod 12,
  // (5) P mod 20 on those classes.
  const auto pell11 = modular::period_table(SequenceKind::Pell, k);
  const auto pell20 = modular::period_table(SequenceKind::Pell, 20);
  struct Case {
    std::uint64_t residue;
    Set preimages;
    Set classes;
    Set pell_mod_20;
  };
  const std::array<Case, 5> cases = {{
      {0, {0, 12}, {0, 6}, {0, 10}},
      {4, {6, 7, 17}, {3}, {5}},
      {6, {9, 15}, {}, {}},
      {9, {14, 22}, {7, 11}, {1, 9}},
      {7, {5, 18}, {9}, {5}},
  }};
  Set pell_mod_20_at_9;
  for (const auto& c : cases) {
    const auto pre = modular::residue_preimages(pell11, c.residue);
    const std::string r = std::to_string(c.residue);
    trace.steps.push_back(compare("n mod 24 with P(n) = " + r + " (mod 11)", pre.members,
                                  c.preimages));
    std::set<std::uint64_t> halves;
    for (auto n : pre.members) {
      if (n % 2 == 0) halves.insert((n / 2) % 12);
    }
    const Set classes = sorted(halves);
    trace.steps.push_back(
        compare("n1 = n/2 mod 12 for even n with P(n) = " + r + " (mod 11)", classes, c.classes));
    std::set<std::uint64_t> values;
    for (auto n1 : classes) values.insert(pell20.at(n1));
    const Set mod20 = sorted(values);
    trace.steps.push_back(
        compare("P(n1) mod 20 on those classes (r = " + r + ")", mod20, c.pell_mod_20));
    if (c.residue == 9) pell_mod_20_at_9 = mod20;
  }

  // (6) the r = 9 branch: p1 = P(n1), p2 = Q(n1) with n1 = 7, 11 (mod 12).
  const auto assoc20 = modular::period_table(SequenceKind::AssocPell, 20);
  std::set<std::uint64_t> q_values;
  for (std::uint64_t n1 : {7, 11}) q_values.insert(assoc20.at(n1));
  const Set q_mod_20 = sorted(q_values);
  trace.steps.push_back(compare("Q(n1) mod 20 for n1 = 7, 11 (mod 12)", q_mod_20, {19}));

  std::set<std::uint64_t> phi_values;
  for (auto p1 : pell_mod_20_at_9) {
    for (auto p2 : q_mod_20) phi_values.insert(((p1 + 19) % 20) * ((p2 + 19) % 20) % 20);
  }
  const Set phi_mod_20 = sorted(phi_values);
  trace.steps.push_back(compare("(p1 - 1)(p2 - 1) mod 20", phi_mod_20, {0, 4}));

  // 8 (10^m - 1)/9 mod 20 over even m >= 2; the repunit state mod 20 has
  // at most 20 values so m <= 42 covers its cycle.
  std::set<std::uint64_t> rep_values;
  std::uint64_t repunit = 1;  // m = 1
  for (std::uint64_t m = 2; m <= 42; ++m) {
    repunit = (10 * repunit + 1) % 20;
    if (m % 2 == 0) rep_values.insert(8 * repunit % 20);
  }
  const Set rep_mod_20 = sorted(rep_values);
  trace.steps.push_back(compare("8 (10^m - 1)/9 mod 20 for even m >= 2", rep_mod_20, {18}));

  Set overlap;
  std::set_intersection(rep_mod_20.begin(), rep_mod_20.end(), phi_mod_20.begin(),
                        phi_mod_20.end(), std::back_inserter(overlap));
  trace.steps.push_back(compare("repdigit residues meeting the totient residues", overlap, {}));
  return trace;
}

ProofTrace eq33_subtrace() {
  ProofTrace trace;
  const auto tens = modular::power_residue_set(Nat(10), 11);
  trace.steps.push_back(compare("10^m mod 11, m >= 1", tens.members, {1, 10}));
  std::set<std::uint64_t> scaled;
  for (auto t : tens.members) scaled.insert(8 * t % 11);
  const Set rhs = sorted(scaled);
  trace.steps.push_back(compare("8 * 10^m mod 11", rhs, {3, 8}));

  const auto pell40 = modular::period_table(SequenceKind::Pell, 40);
  Set classes;
  for (std::uint64_t n = 0; n < pell40.period(); ++n) {
    if ((9 * pell40.at(n) + 39) % 40 == 0) classes.push_back(n);
  }
  trace.steps.push_back(compare("n mod 24 with 9 P(n) - 1 = 0 (mod 40)", classes, {7, 17}));

  const auto pell11 = modular::period_table(SequenceKind::Pell, 11);
  std::set<std::uint64_t> p11;
  for (auto n : classes) p11.insert(pell11.at(n));
  const Set p_mod_11 = sorted(p11);
  trace.steps.push_back(compare("P(n) mod 11 on those classes", p_mod_11, {4}));

  std::set<std::uint64_t> lhs_values;
  for (auto p : p_mod_11) lhs_values.insert((9 * p + 10) % 11);
  const Set lhs = sorted(lhs_values);
  trace.steps.push_back(compare("9 P(n) - 1 mod 11", lhs, {2}));

  Set overlap;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(overlap));
  trace.steps.push_back(compare("left residues meeting right residues", overlap, {}));
  return trace;
}

VerificationReport verify_eq33(std::uint64_t n_max) {
  if (n_max < 1) throw arith::DomainError("verify_eq33 needs n_max >= 1");
  detail::Stopwatch clock;
  VerificationReport report;
  report.claim_id = "eq-3.3";
  report.params["max_n"] = std::to_string(n_max);

  const auto P = seq::terms_upto(SequenceKind::Pell, n_max);
  bool found = false;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::string digits = Nat(9 * P[n] - 1).get_str();
    // 8 * 10^m with m >= 1: "8" followed by at least one zero.
    if (digits.size() >= 2 && digits.front() == '8' &&
        std::all_of(digits.begin() + 1, digits.end(), [](char c) { return c == '0'; })) {
      found = true;
      report.witnesses.push_back({{n}, digits, "9 P(n) - 1 = 8 * 10^" +
                                                   std::to_string(digits.size() - 1)});
    }
  }
  report.notes.push_back("n = 1 gives 9 P(1) - 1 = 8 = 8 * 10^0, outside m >= 1");

  const auto trace = eq33_subtrace();
  for (const auto& step : trace.steps) {
    report.notes.push_back(std::string(step.match ? "[match] " : "[MISMATCH] ") +
                           step.description + ": " + step.computed + " (expected " +
                           step.expected + ")");
  }
  if (!trace.passes()) {
    report.witnesses.push_back({{0}, "", "mod 11 sub-trace disagrees"});
  }
  finalize(report, found || !trace.passes());
  report.elapsed = clock.elapsed();
  return report;
}

const std::vector<TableRow>& pell_table_rows() {
  static const std::vector<TableRow> rows = {
      {11, {0, 1, 2, 5, 1, 7, 4, 4, 1, 6, 2, 10, 0, 10, 9, 6, 10, 4, 7, 7, 10, 5, 9, 1}},
      {20, {0, 1, 2, 5, 12, 9, 10, 9, 8, 5, 18, 1}},
      {40, {0, 1, 2, 5, 12, 29, 30, 9, 8, 25, 18, 21, 20, 21, 22, 25, 32, 9, 10, 29, 28, 5, 38,
            1}},
  };
  return rows;
}

const std::vector<TableRow>& assoc_pell_table_rows() {
  static const std::vector<TableRow> rows = {
      {4, {1, 1, 3, 3}},
      {5, {1, 1, 3, 2, 2, 1, 4, 4, 2, 3, 3, 4}},
      {8, {1, 1, 3, 7}},
      {20, {1, 1, 3, 7, 17, 1, 19, 19, 17, 13, 3, 19}},
  };
  return rows;
}

VerificationReport verify_period_tables(SequenceKind kind) {
  detail::Stopwatch clock;
  VerificationReport report;
  const bool pell = kind == SequenceKind::Pell;
  if (!pell && kind != SequenceKind::AssocPell) {
    throw arith::DomainError("period tables exist for pell and assoc-pell only");
  }
  report.claim_id = pell ? "table-1" : "table-2";
  report.params["kind"] = detail::kind_param(kind);
  bool failed = false;
  for (const auto& row : pell ? pell_table_rows() : assoc_pell_table_rows()) {
    const auto table = modular::period_table(kind, row.modulus);
    const bool same = table.residues == row.residues;
    failed = failed || !same;
    report.witnesses.push_back({{row.modulus},
                                detail::join(table.residues),
                                "period " + std::to_string(table.period()) +
                                    (same ? "" : "; reference " + detail::join(row.residues))});
  }
  finalize(report, failed);
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace pellphi::verify
