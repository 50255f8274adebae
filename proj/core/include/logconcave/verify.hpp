// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_VERIFY_HPP_
#define LOGCONCAVE_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logconcave/report.hpp"
#include "logconcave/series.hpp"

namespace logconcave {

class RowCache;

/// Signs of Delta_d(n) for 1 <= d <= d_max, 1 <= n <= n_max.
class LandscapeGrid {
 public:
  LandscapeGrid(unsigned d_max, std::uint64_t n_max);

  unsigned d_max() const noexcept { return d_max_; }
  std::uint64_t n_max() const noexcept { return n_max_; }

  DeltaClass at(std::uint64_t n, unsigned d) const;
  void set(std::uint64_t n, unsigned d, DeltaClass c);

  bool is_exception(std::uint64_t n, unsigned d) const {
    return at(n, d) == DeltaClass::StrictlyLogConvex;
  }
  std::set<std::uint64_t> exceptions_for_d(unsigned d) const;

  /// Rows n, columns d; a bullet marks an exception.
  std::string to_markdown() const;
  /// Header `n,d1,...`; cells are `-1`, `0`, `1` for the sign of Delta.
  std::string to_csv(char sep = ',') const;

 private:
  unsigned d_max_;
  std::uint64_t n_max_;
  std::vector<DeltaClass> cells_;
};

struct VerifyOptions {
  /// Worker threads for per-d parallelism; 0 = hardware concurrency.
  unsigned jobs = 0;
  /// Optional shared row store; rows are computed fresh when null.
  RowCache* cache = nullptr;
  /// Seed for the random consistency spot checks.
  std::uint64_t seed = 20221;
  /// Fraction of grid cells re-derived from fresh rows.
  double spot_check_fraction = 0.01;
};

/// Exact-sign grid; one row computation per d, d in parallel.
LandscapeGrid landscape(unsigned d_max, std::uint64_t n_max, const VerifyOptions& opts = {});

/// Re-derives a random subset of cells from freshly computed rows. Returns
/// the cells that disagree (empty when consistent).
std::vector<Witness> spot_check(const LandscapeGrid& grid, const VerifyOptions& opts);

/// Recomputes Delta_d(n) from a fresh row. Returns the witness when its sign
/// matches `expected`, nullopt when the recomputation disagrees.
std::optional<Witness> confirm_witness(std::uint64_t n, unsigned d, DeltaClass expected,
                                       std::string note = {});

// Suites. Each returns a self-contained report.

VerificationReport table1_suite(std::uint64_t n_max = 2000, const VerifyOptions& opts = {});
VerificationReport table2_suite(const VerifyOptions& opts = {});
VerificationReport table3_suite();
VerificationReport table4_suite(const VerifyOptions& opts = {});
VerificationReport theorem_eins_suite(unsigned d_cap = 200, const VerifyOptions& opts = {});
VerificationReport corollary_suite(unsigned d_cap = 120, const VerifyOptions& opts = {});
VerificationReport boundary_case_suite(const VerifyOptions& opts = {});
VerificationReport conjecture_scan(std::uint64_t n_max = 200, unsigned d_max = 60,
                                   const VerifyOptions& opts = {});

/// Least d in [d_lo, d_hi] for which `holds(d)` is true, nullopt if none.
template <class Pred>
std::optional<unsigned> first_d(unsigned d_lo, unsigned d_hi, Pred&& holds) {
  for (unsigned d = d_lo; d <= d_hi; ++d) {
    if (holds(d)) return d;
  }
  return std::nullopt;
}

}  // namespace logconcave

#endif  // LOGCONCAVE_VERIFY_HPP_
