// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/report.hpp"

#include <sstream>

#include <json.hpp>

namespace logconcave {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["n"] = w.n;
  j["d"] = w.d;
  if (!w.delta.empty()) j["delta"] = w.delta;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json scope = ordered_json::object();
  for (const auto& [k, v] : r.scope) scope[k] = v;
  j["scope"] = scope;
  j["status"] = std::string(to_string(r.status));
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.all_witnesses()) witnesses.push_back(witness_json(w));
  j["witnesses"] = witnesses;
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.details) {
    ordered_json cj;
    cj["claim"] = c.claim;
    cj["holds"] = c.holds;
    cj["epistemic"] = c.epistemic;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    ordered_json ws = ordered_json::array();
    for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
    cj["witnesses"] = ws;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  return j;
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Counterexample: return "Counterexample";
    case Status::ConfirmedInRange: return "Confirmed-in-range";
  }
  return "?";
}

bool is_success(Status s) noexcept {
  return s == Status::Pass || s == Status::ConfirmedInRange;
}

void VerificationReport::settle() {
  status = Status::Pass;
  for (const auto& c : details) {
    if (c.holds) continue;
    if (c.epistemic != "conjecture") {
      status = Status::Fail;
      return;
    }
    status = Status::Counterexample;
  }
}

std::vector<Witness> VerificationReport::all_witnesses() const {
  std::vector<Witness> out;
  for (const auto& c : details) {
    if (c.holds) continue;
    out.insert(out.end(), c.witnesses.begin(), c.witnesses.end());
  }
  return out;
}

std::string to_json(const VerificationReport& r, int indent) {
  return report_json(r).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "### " << r.suite << ": " << to_string(r.status) << "\n\n";
  if (!r.scope.empty()) {
    os << "Scope:";
    for (const auto& [k, v] : r.scope) os << ' ' << k << '=' << v;
    os << "\n\n";
  }
  os << "| claim | holds | status | detail |\n|---|---|---|---|\n";
  for (const auto& c : r.details) {
    os << "| " << escape_cell(c.claim) << " | " << (c.holds ? "yes" : "NO") << " | "
       << c.epistemic << " | " << escape_cell(c.detail) << " |\n";
  }
  const auto witnesses = r.all_witnesses();
  if (!witnesses.empty()) {
    os << "\nWitnesses:\n\n| n | d | Delta | note |\n|---|---|---|---|\n";
    for (const auto& w : witnesses) {
      os << "| " << w.n << " | " << w.d << " | " << w.delta << " | " << escape_cell(w.note)
         << " |\n";
    }
  }
  return os.str();
}

}  // namespace logconcave
