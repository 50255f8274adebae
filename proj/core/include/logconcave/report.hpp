// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_REPORT_HPP_
#define LOGCONCAVE_REPORT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logconcave {

enum class Status { Pass, Fail, Counterexample, ConfirmedInRange };

std::string_view to_string(Status s) noexcept;

/// Pass and ConfirmedInRange are successes; Fail and Counterexample are not.
bool is_success(Status s) noexcept;

/// One (n, d) point backing a claim. `delta` is the exact decimal Delta_d(n)
/// when the witness is about a sign; `note` carries anything else.
struct Witness {
  unsigned long long n = 0;
  unsigned d = 0;
  std::string delta;
  std::string note;
};

struct ClaimRecord {
  std::string claim;
  bool holds = true;
  /// "proved", "empirical", "range-limited", "conjecture" or "observation".
  std::string epistemic;
  std::string detail;
  std::vector<Witness> witnesses;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> scope;
  Status status = Status::Pass;
  std::vector<ClaimRecord> details;

  /// Fail if a non-conjecture claim does not hold, Counterexample if only
  /// conjecture claims fail, Pass otherwise.
  void settle();
  std::vector<Witness> all_witnesses() const;
};

/// {"suite", "scope", "status", "witnesses", "claims"}; deterministic key
/// order and formatting.
std::string to_json(const VerificationReport& r, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);

/// Heading plus a claim table mirroring the layout of the source tables.
std::string to_markdown(const VerificationReport& r);

}  // namespace logconcave

#endif  // LOGCONCAVE_REPORT_HPP_
