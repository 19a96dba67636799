#include "pellphi/report.hpp"

#include <iomanip>
#include <sstream>

namespace pellphi::report {

using nlohmann::json;

std::string render_table(const modular::PeriodTable& table) {
  std::string out = std::to_string(table.modulus) + " | ";
  for (std::size_t i = 0; i < table.residues.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(table.residues[i]);
  }
  out += " | " + std::to_string(table.period());
  return out;
}

json table_to_json(const modular::PeriodTable& table) {
  return {{"kind", std::string(seq::name(table.kind))},
          {"modulus", table.modulus},
          {"residues", table.residues},
          {"period", table.period()}};
}

json to_json(const verify::VerificationReport& report, const Meta& meta) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"index", w.index}, {"value", w.value}, {"note", w.note}});
  }
  return {
      {"claim_id", report.claim_id},
      {"params", report.params},
      {"status", std::string(verify::to_string(report.status))},
      {"witnesses", std::move(witnesses)},
      {"unresolved", report.unresolved},
      {"notes", report.notes},
      {"meta",
       {{"elapsed", report.elapsed.count()},
        {"budget", meta.budget_seconds},
        {"version", kVersion}}},
  };
}

verify::VerificationReport from_json(const json& j) {
  verify::VerificationReport report;
  report.claim_id = j.at("claim_id").get<std::string>();
  report.params = j.at("params").get<std::map<std::string, std::string>>();
  report.status = verify::parse_status(j.at("status").get<std::string>());
  for (const auto& w : j.at("witnesses")) {
    report.witnesses.push_back({w.at("index").get<std::vector<std::uint64_t>>(),
                                w.at("value").get<std::string>(),
                                w.at("note").get<std::string>()});
  }
  report.unresolved = j.at("unresolved").get<std::vector<std::uint64_t>>();
  report.notes = j.at("notes").get<std::vector<std::string>>();
  report.elapsed = std::chrono::duration<double>(j.at("meta").at("elapsed").get<double>());
  return report;
}

json trace_to_json(const verify::ProofTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"description", s.description},
                     {"computed", s.computed},
                     {"expected", s.expected},
                     {"match", s.match}});
  }
  return {{"passes", trace.passes()}, {"steps", std::move(steps)}};
}

namespace {

std::string index_text(const std::vector<std::uint64_t>& index) {
  if (index.size() == 1) return std::to_string(index.front());
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(index[i]);
  }
  return out + ")";
}

}  // namespace

std::string render_text(const verify::VerificationReport& report) {
  std::ostringstream out;
  out << report.claim_id << ": " << verify::to_string(report.status);
  for (const auto& [key, value] : report.params) out << "  " << key << "=" << value;
  out << "\n";
  for (const auto& w : report.witnesses) {
    out << "  witness " << index_text(w.index) << ": " << w.value;
    if (!w.note.empty()) out << "  [" << w.note << "]";
    out << "\n";
  }
  if (!report.unresolved.empty()) {
    out << "  unresolved:";
    for (auto n : report.unresolved) out << " " << n;
    out << "\n";
  }
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  out << "  elapsed: " << std::fixed << std::setprecision(3) << report.elapsed.count()
      << " s\n";
  return out.str();
}

std::string render_trace(const verify::ProofTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << std::setw(2) << i + 1 << ". [" << (s.match ? "match" : "MISMATCH") << "] "
        << s.description << "\n      computed " << s.computed << "  expected " << s.expected
        << "\n";
  }
  out << (trace.passes() ? "trace passes\n" : "trace FAILS\n");
  return out.str();
}

}  // namespace pellphi::report
