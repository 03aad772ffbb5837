// JSON serialization of case reports. The field names
// {case, verdict, tier, max_fix, degree, stab_order, spectrum, audits,
//  conditional, seed, millis} are part of the tool's contract.

#pragma once

#include <json.hpp>

#include "table.hpp"

namespace fix3 {

inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["case"] = rep.id;
  j["verdict"] = rep.error ? "error"
                           : (rep.verdict.satisfied ? "satisfied"
                                                    : "unsatisfied");
  j["tier"] = tier_name(rep.verdict.tier);
  j["max_fix"] = rep.verdict.max_fix_nontrivial;
  j["degree"] = rep.degree;
  j["stab_order"] = rep.stab_order;
  {
    nlohmann::ordered_json spec = nlohmann::ordered_json::object();
    if (rep.has_spectrum)
      for (const auto& [k, c] : rep.spectrum) spec[std::to_string(k)] = c;
    j["spectrum"] = spec;
  }
  {
    nlohmann::ordered_json audits = nlohmann::ordered_json::array();
    for (const AuditReport& a : rep.audits) {
      nlohmann::ordered_json aj;
      aj["name"] = a.name;
      aj["passed"] = a.passed;
      aj["detail"] = a.detail;
      audits.push_back(std::move(aj));
    }
    j["audits"] = audits;
  }
  j["conditional"] = rep.conditional;
  j["seed"] = rep.seed;
  j["millis"] = rep.millis;
  // supplementary fields
  j["expected"] = rep.expect_satisfied ? "satisfied" : "unsatisfied";
  j["ok"] = rep.ok;
  j["group_order"] = rep.group_order;
  if (!rep.verdict.violation.empty()) j["violation"] = rep.verdict.violation;
  if (rep.verdict.witness3)
    j["witness3"] = rep.verdict.witness3->cycle_string();
  if (!rep.verdict.witness_note.empty())
    j["witness_note"] = rep.verdict.witness_note;
  if (rep.error) j["error"] = rep.error_text;
  if (!rep.paper_row.empty()) j["row"] = rep.paper_row;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

inline nlohmann::ordered_json reports_json(const std::vector<Report>& reps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reps) arr.push_back(report_json(r));
  return arr;
}

}  // namespace fix3
