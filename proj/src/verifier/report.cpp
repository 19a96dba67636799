#include <algorithm>
#include <stdexcept>

#include "common.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::verify {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Verified:
      return "Verified";
    case Status::Counterexample:
      return "Counterexample";
    case Status::Unresolved:
      return "Unresolved";
  }
  return "Unresolved";
}

Status parse_status(std::string_view text) {
  if (text == "Verified") return Status::Verified;
  if (text == "Counterexample") return Status::Counterexample;
  if (text == "Unresolved") return Status::Unresolved;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

bool ProofTrace::passes() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const TraceStep& s) { return s.match; });
}

void finalize(VerificationReport& report, bool counterexample) {
  std::stable_sort(report.witnesses.begin(), report.witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.index < b.index; });
  std::sort(report.unresolved.begin(), report.unresolved.end());
  report.unresolved.erase(std::unique(report.unresolved.begin(), report.unresolved.end()),
                          report.unresolved.end());
  if (counterexample) {
    report.status = Status::Counterexample;
  } else if (!report.unresolved.empty()) {
    report.status = Status::Unresolved;
  } else {
    report.status = Status::Verified;
  }
}

VerificationReport report_from_trace(std::string claim_id, const ProofTrace& trace) {
  VerificationReport report;
  report.claim_id = std::move(claim_id);
  report.params["steps"] = std::to_string(trace.steps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    report.notes.push_back("step " + std::to_string(i + 1) + " [" +
                           (step.match ? "match" : "MISMATCH") + "] " + step.description +
                           ": computed " + step.computed + ", expected " + step.expected);
    if (!step.match) {
      report.witnesses.push_back(
          {{i + 1}, step.computed, step.description + "; expected " + step.expected});
    }
  }
  finalize(report, !trace.passes());
  return report;
}

VerificationReport merge_reports(std::string claim_id,
                                 const std::vector<VerificationReport>& parts) {
  VerificationReport merged;
  merged.claim_id = std::move(claim_id);
  bool counterexample = false;
  for (const auto& part : parts) {
    const std::string prefix = part.claim_id.empty() ? "" : part.claim_id + ".";
    for (const auto& [key, value] : part.params) merged.params[prefix + key] = value;
    for (const auto& w : part.witnesses) {
      merged.witnesses.push_back({w.index, w.value, prefix + w.note});
    }
    merged.unresolved.insert(merged.unresolved.end(), part.unresolved.begin(),
                             part.unresolved.end());
    for (const auto& note : part.notes) merged.notes.push_back(prefix + note);
    merged.elapsed += part.elapsed;
    counterexample = counterexample || part.status == Status::Counterexample;
  }
  finalize(merged, counterexample);
  return merged;
}

}  // namespace pellphi::verify
