// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_BOUNDS_HPP_
#define LOGCONCAVE_BOUNDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "logconcave/series.hpp"

namespace logconcave {

/// Exact rational envelope lower < p_d(n) <= upper, driven by the largest
/// partition products of n.
struct BoundSet {
  unsigned n = 0;
  unsigned d = 0;
  unsigned residue = 0;
  Rational lower;
  Rational upper;
  /// Only for n = 2 (mod 3), n >= 8: adds the second-largest product term
  /// instead of charging every partition at the maximum.
  std::optional<Rational> improved_upper;

  /// min(upper, improved_upper).
  Rational tightest_upper() const;
};

/// `p1_row` must be the power(1) row covering n. Rejects n < 2 and
/// n = 1 (mod 3) below 4.
BoundSet pd_bounds(unsigned n, unsigned d, const CoeffRow& p1_row);

/// Sharper envelopes used only around n = 8, where the largest product of 8
/// (18) and the second-largest (16) are too close for the generic chain:
///   p_d(7) > 3/2 12^{d-1}
///   p_d(8) < 1/2 18^{d-1} + 25/24 16^{d-1} + 21 15^{d-1}
///   p_d(9) > 1/6 27^{d-1} + 7/6 24^{d-1}
struct N8SpecialBounds {
  Rational p7_lower;
  Rational p8_upper;
  Rational p9_lower;
};

N8SpecialBounds n8_special_bounds(unsigned d);

enum class Certificate { CertifiedPositive, CertifiedNegative, Inconclusive };

std::string_view to_string(Certificate c) noexcept;

/// Decides sign(Delta_d(n)) from the bound envelopes alone, by exact
/// cross-multiplication:
///   n = 0 (mod 3): lower(n)^2 > upper(n-1) upper(n+1)   -> positive
///   otherwise:     upper(n)^2 < lower(n-1) lower(n+1)   -> negative
/// n = 8 uses N8SpecialBounds. Requires n >= 6 and p1_row covering n+1.
Certificate bound_ratio_certificate(unsigned n, unsigned d, const CoeffRow& p1_row);

// ---------------------------------------------------------------------------
// Threshold constants on d.

enum class ConstantKind { C0, C1, C2, C1Tilde, C2Tilde, C0Star, C1Star, C2Star };

std::string_view to_string(ConstantKind k) noexcept;

/// Residue of n mod 3 for which `k` is defined.
unsigned residue_of(ConstantKind k) noexcept;

enum class Precision { Double, Bits256, Bits512 };

struct Constant {
  double value = 0;
  long long ceiling = 0;
};

/// Value and ceiling of one constant. The ceiling is taken from a 256-bit
/// evaluation whenever the double value lies within 1e-9 of an integer.
/// Requires n >= 6 and n = residue_of(k) (mod 3).
Constant threshold_constant(ConstantKind k, unsigned n);

/// Ceiling evaluated entirely at the given precision.
long long constant_ceiling(ConstantKind k, unsigned n, Precision p);

struct ThresholdConstants {
  unsigned n = 0;
  std::optional<Constant> c0, c1, c2;
  std::optional<Constant> c1_tilde, c2_tilde;
  std::optional<Constant> c0_star, c1_star, c2_star;

  /// C_r for the residue of n.
  const Constant& c() const;
  /// C~_r, absent for n = 0 (mod 3).
  const std::optional<Constant>& c_tilde() const;
  const Constant& c_star() const;
};

/// Every constant whose residue matches n. Requires n >= 6.
ThresholdConstants threshold_constants(unsigned n);

/// The d at which the certificate is expected to close: ceil(C0(n)) for
/// n = 0 (mod 3), ceil(C~_r(n)) otherwise.
long long certificate_threshold(unsigned n);

struct DominanceReport {
  unsigned from = 0;
  unsigned to = 0;
  std::size_t checked = 0;
  struct Violation {
    unsigned n;
    ConstantKind star;
    double c;
    double c_star;
  };
  /// n where C*_r(n) > C_r(n) fails; empty on success.
  std::vector<Violation> violations;
  struct TildeExcess {
    unsigned n;
    ConstantKind tilde;
    double tilde_value;
    long long c_ceiling;
  };
  /// n where C~_r(n) > ceil(C_r(n)). Observational only.
  std::vector<TildeExcess> tilde_exceeds;
  std::vector<unsigned> tilde_not_exceeding;

  bool star_dominates() const noexcept { return violations.empty(); }
};

/// Checks C*_r(n) > C_r(n) for n in [from, to] and reports where C~ exceeds
/// ceil(C). Requires 6 <= from <= to <= 10^6.
DominanceReport dominance_check(unsigned from, unsigned to);

struct Figure2Row {
  unsigned n = 0;
  std::optional<double> c1, c2, c1_tilde, c2_tilde;
};

std::vector<Figure2Row> figure2_data(unsigned from, unsigned to, unsigned step = 1);

/// Header `n,C1,C2,C1_tilde,C2_tilde`; cells are empty where the residue
/// does not apply.
void write_figure2_csv(std::ostream& os, const std::vector<Figure2Row>& rows);

}  // namespace logconcave

#endif  // LOGCONCAVE_BOUNDS_HPP_
