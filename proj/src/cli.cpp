#include "pellphi/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>

#include "pellphi/modular.hpp"

namespace pellphi::cli {

namespace {

using seq::SequenceKind;
using verify::VerificationReport;

struct Claim {
  std::string id;
  std::function<VerificationReport(const RunConfig&)> run;
};

std::uint64_t bound(const RunConfig& c, std::uint64_t fallback) {
  return c.max_n.value_or(fallback);
}

VerificationReport renamed(VerificationReport r, std::string id) {
  r.claim_id = std::move(id);
  return r;
}

VerificationReport primitive_both(const RunConfig& c, const std::string& id) {
  auto pell = verify::verify_primitive_congruence(SequenceKind::Pell, bound(c, 100), c.options());
  auto assoc =
      verify::verify_primitive_congruence(SequenceKind::AssocPell, bound(c, 100), c.options());
  pell.claim_id = "pell";
  assoc.claim_id = "assoc-pell";
  return verify::merge_reports(id, {pell, assoc});
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = {
      {"lemma-2.1", [](const RunConfig& c) { return verify::verify_identities(bound(c, 400)); }},
      {"lemma-2.2",
       [](const RunConfig& c) {
         return verify::search_perfect_powers(SequenceKind::Pell, bound(c, 200));
       }},
      {"lemma-2.3",
       [](const RunConfig& c) {
         return verify::search_product_squares(SequenceKind::Pell, bound(c, 60));
       }},
      {"lemma-2.4",
       [](const RunConfig& c) {
         return verify::search_perfect_powers(SequenceKind::AssocPell, bound(c, 200));
       }},
      {"lemma-2.5",
       [](const RunConfig& c) {
         return verify::search_product_squares(SequenceKind::AssocPell, bound(c, 60));
       }},
      {"lemma-2.6", [](const RunConfig& c) { return verify::search_4pm(bound(c, 120)); }},
      {"lemma-2.7", [](const RunConfig& c) { return primitive_both(c, "lemma-2.7"); }},
      {"lemma-2.8", [](const RunConfig& c) { return primitive_both(c, "lemma-2.8"); }},
      {"lemma-2.9",
       [](const RunConfig& c) { return verify::verify_1mod4_factor(bound(c, 120), c.options()); }},
      {"lemma-2.10",
       [](const RunConfig& c) { return verify::verify_prime_index_structure(bound(c, 100)); }},
      {"lemma-2.11",
       [](const RunConfig& c) { return verify::verify_totient_bound(bound(c, 1'000'000)); }},
      {"theorem-3.1",
       [](const RunConfig& c) {
         return verify::search_repdigit_totients(SequenceKind::Pell, bound(c, 60),
                                                 c.min_m.value_or(2), c.options());
       }},
      {"theorem-4.1",
       [](const RunConfig& c) {
         return verify::search_repdigit_totients(SequenceKind::AssocPell, bound(c, 60),
                                                 c.min_m.value_or(1), c.options());
       }},
      {"theorem-4.2",
       [](const RunConfig& c) {
         return renamed(verify::verify_section4_structure(bound(c, 80), c.options()),
                        "theorem-4.2");
       }},
      {"theorem-4.3",
       [](const RunConfig& c) {
         return renamed(verify::verify_section4_structure(bound(c, 80), c.options()),
                        "theorem-4.3");
       }},
      {"theorem-4.4",
       [](const RunConfig& c) {
         return renamed(verify::verify_section4_structure(bound(c, 80), c.options()),
                        "theorem-4.4");
       }},
      {"eq-3.3", [](const RunConfig& c) { return verify::verify_eq33(bound(c, 500)); }},
      {"table-1",
       [](const RunConfig&) { return verify::verify_period_tables(SequenceKind::Pell); }},
      {"table-2",
       [](const RunConfig&) { return verify::verify_period_tables(SequenceKind::AssocPell); }},
      {"remark-balancing",
       [](const RunConfig& c) { return verify::verify_balancing_link(bound(c, 400)); }},
  };
  return claims;
}

double default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      const double value = std::stod(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 10.0;
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SequenceKind kind_of(const RunConfig& c) {
  if (c.target.empty()) throw UsageError(c.command + " needs a sequence kind");
  try {
    return seq::parse_kind(c.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t modulus_of(const RunConfig& c) {
  if (!c.modulus) throw UsageError(c.command + " needs --mod K");
  if (*c.modulus < 2 || *c.modulus > 1'000'000) throw UsageError("--mod must be in [2, 1e6]");
  return *c.modulus;
}

int emit(const std::vector<VerificationReport>& reports, const RunConfig& c, std::ostream& out) {
  if (c.output == report::Format::Json) {
    const report::Meta meta{c.budget_seconds};
    if (reports.size() == 1) {
      out << report::to_json(reports.front(), meta).dump(2) << "\n";
    } else {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : reports) all.push_back(report::to_json(r, meta));
      out << all.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) out << report::render_text(r);
  }
  return exit_code(reports);
}

int dispatch(const RunConfig& c, std::ostream& out) {
  const bool json = c.output == report::Format::Json;
  if (c.command == "seq") {
    const auto kind = kind_of(c);
    const auto terms = seq::terms_upto(kind, bound(c, 20));
    if (json) {
      nlohmann::json values = nlohmann::json::array();
      for (const auto& t : terms) values.push_back(t.get_str());
      out << nlohmann::json{{"kind", std::string(seq::name(kind))}, {"terms", values}}.dump(2)
          << "\n";
    } else {
      for (std::size_t n = 0; n < terms.size(); ++n) out << n << " " << terms[n].get_str() << "\n";
    }
    return kExitVerified;
  }
  if (c.command == "table") {
    const auto table = modular::period_table(kind_of(c), modulus_of(c));
    out << (json ? report::table_to_json(table).dump(2) : report::render_table(table)) << "\n";
    return kExitVerified;
  }
  if (c.command == "preimages") {
    const auto table = modular::period_table(kind_of(c), modulus_of(c));
    std::vector<std::uint64_t> residues;
    if (c.residue) {
      if (*c.residue >= table.modulus) throw UsageError("--residue must be below --mod");
      residues.push_back(*c.residue);
    } else {
      for (std::uint64_t r = 0; r < table.modulus; ++r) residues.push_back(r);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (auto r : residues) {
      const auto pre = modular::residue_preimages(table, r);
      if (json) {
        rows.push_back({{"residue", r}, {"period", pre.modulus}, {"indices", pre.members}});
      } else {
        out << r << " | ";
        for (std::size_t i = 0; i < pre.members.size(); ++i) {
          out << (i ? ", " : "") << pre.members[i];
        }
        out << " | " << pre.modulus << "\n";
      }
    }
    if (json) out << rows.dump(2) << "\n";
    return kExitVerified;
  }
  if (c.command == "verify") {
    if (c.target.empty()) throw UsageError("verify needs a claim id");
    std::vector<VerificationReport> reports;
    if (c.target == "all") {
      for (const auto& id : claim_ids()) reports.push_back(run_claim(id, c));
    } else {
      reports.push_back(run_claim(c.target, c));
    }
    return emit(reports, c, out);
  }
  if (c.command == "replay") {
    verify::ProofTrace trace;
    if (c.target == "theorem-3.1") {
      trace = verify::replay_theorem31_cases();
    } else if (c.target == "eq-3.3") {
      trace = verify::eq33_subtrace();
    } else {
      throw UsageError("replay supports theorem-3.1 and eq-3.3");
    }
    out << (json ? report::trace_to_json(trace).dump(2) + "\n" : report::render_trace(trace));
    return trace.passes() ? kExitVerified : kExitCounterexample;
  }
  if (c.command == "search") {
    const auto kind = kind_of(c);
    if (kind == SequenceKind::Balancing) throw UsageError("search supports pell and assoc-pell");
    return emit({verify::search_repdigit_totients(kind, bound(c, 60), c.min_m.value_or(2),
                                                  c.options())},
                c, out);
  }
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

verify::RunOptions RunConfig::options() const {
  return {arith::Budget(budget_seconds), jobs};
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& claim : registry()) out.push_back(claim.id);
    return out;
  }();
  return ids;
}

VerificationReport run_claim(const std::string& claim_id, const RunConfig& config) {
  for (const auto& claim : registry()) {
    if (claim.id == claim_id) return claim.run(config);
  }
  throw std::invalid_argument("unknown claim id '" + claim_id + "'");
}

int exit_code(const std::vector<VerificationReport>& reports) {
  int code = kExitVerified;
  for (const auto& r : reports) {
    if (r.status == verify::Status::Counterexample) return kExitCounterexample;
    if (r.status == verify::Status::Unresolved) code = kExitUnresolved;
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.budget_seconds = default_budget();

  CLI::App app{"pellphi: Pell and associated Pell totient verification", "pellphi"};
  app.set_help_flag();
  app.allow_extras(false);
  bool help = false;
  bool json = false;
  app.add_flag("-h,--help", help);
  app.add_option("command", config.command);
  app.add_option("target", config.target);
  app.add_option("--mod", config.modulus);
  app.add_option("--max-n", config.max_n);
  app.add_option("--min-m", config.min_m)->check(CLI::PositiveNumber);
  app.add_option("--residue", config.residue);
  app.add_option("--budget", config.budget_seconds)->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs)->check(CLI::PositiveNumber);
  app.add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  }
  if (help) {
    out << kGrammar;
    return kExitVerified;
  }
  if (config.command.empty()) {
    err << kGrammar;
    return kExitUsage;
  }
  config.output = json ? report::Format::Json : report::Format::Text;

  try {
    return dispatch(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  } catch (const arith::DomainError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  }
}

}  // namespace pellphi::cli
