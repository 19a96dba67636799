#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pellphi/report.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUnresolved = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kBudgetEnv = "PELLPHI_BUDGET";

inline constexpr const char* kGrammar =
    "usage: pellphi <command> [claim-id|kind] [--mod K] [--max-n N] [--min-m M]\n"
    "               [--residue R] [--budget SECONDS] [--jobs J] [--json]\n"
    "commands:\n"
    "  seq <kind>           terms 0..N (default N = 20)\n"
    "  table <kind>         residue cycle and period mod K\n"
    "  preimages <kind>     indices mod the period for each residue (or only R) mod K\n"
    "  verify <claim-id>    run a registered claim, or 'all'\n"
    "  replay <claim-id>    residue case analysis trace (theorem-3.1, eq-3.3)\n"
    "  search <kind>        repdigit totients up to N with at least M digits\n"
    "kinds: pell, assoc-pell, balancing\n"
    "exit: 0 verified, 1 counterexample, 2 unresolved, 64 usage error\n";

struct RunConfig {
  std::string command;
  std::string target;
  std::optional<std::uint64_t> modulus;
  std::optional<std::uint64_t> max_n;
  std::optional<unsigned> min_m;
  std::optional<std::uint64_t> residue;
  double budget_seconds = 10.0;
  unsigned jobs = 1;
  report::Format output = report::Format::Text;

  verify::RunOptions options() const;
};

const std::vector<std::string>& claim_ids();

/// Runs one registered claim with its default bounds unless the config
/// overrides them. Throws std::invalid_argument for an unknown id.
verify::VerificationReport run_claim(const std::string& claim_id, const RunConfig& config);

/// Counterexample beats Unresolved beats Verified.
int exit_code(const std::vector<verify::VerificationReport>& reports);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellphi::cli
