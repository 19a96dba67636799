#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pellphi/modular.hpp"
#include "pellphi/verifier.hpp"

namespace pellphi::report {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { Text, Json };

/// "k | r0, r1, ... | period"
std::string render_table(const modular::PeriodTable& table);
nlohmann::json table_to_json(const modular::PeriodTable& table);

struct Meta {
  double budget_seconds = 0.0;
};

/// {claim_id, params, status, witnesses[], unresolved[], notes[],
///  meta{elapsed, budget, version}}
nlohmann::json to_json(const verify::VerificationReport& report, const Meta& meta = {});
verify::VerificationReport from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const verify::ProofTrace& trace);

std::string render_text(const verify::VerificationReport& report);
std::string render_trace(const verify::ProofTrace& trace);

}  // namespace pellphi::report
