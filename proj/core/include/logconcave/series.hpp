// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_SERIES_HPP_
#define LOGCONCAVE_SERIES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace logconcave {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an exact-arithmetic invariant is broken (a division that
/// must be exact leaves a remainder, a rational that must be integral is
/// not). Always indicates a bug, never bad input.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent rule n -> alpha_n of the product prod_{n>=1} (1 - q^n)^{-alpha_n}.
///
/// Either the power family alpha_n = n^{d-1}, or an arbitrary rule supplied by
/// the caller. Custom rules must return a nonnegative integer for every
/// n >= 1; this is checked each time the rule is evaluated.
class ExponentSequence {
 public:
  using Rule = std::function<BigInt(std::uint64_t)>;

  static ExponentSequence power(unsigned d);
  /// `label` is only used in diagnostics and report headers.
  static ExponentSequence custom(Rule rule, std::string label = "custom");
  /// Custom rule backed by a finite table alpha_1, alpha_2, ... . Evaluating
  /// past the end of the table throws.
  static ExponentSequence from_values(std::vector<BigInt> values,
                                      std::string label = "table");

  bool is_power() const noexcept { return !rule_; }
  /// Power-family parameter; 0 for custom sequences.
  unsigned d() const noexcept { return d_; }
  const std::string& label() const noexcept { return label_; }

  /// alpha_n for n >= 1.
  BigInt operator()(std::uint64_t n) const;

  std::string describe() const;

 private:
  ExponentSequence() = default;

  unsigned d_ = 0;
  Rule rule_;
  std::string label_;
};

/// Exact coefficients p_alpha(0..n_max) of one product. Immutable once built.
struct CoeffRow {
  ExponentSequence seq;
  std::vector<BigInt> coeffs;

  std::size_t n_max() const noexcept { return coeffs.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs.at(n); }
};

using RowPtr = std::shared_ptr<const CoeffRow>;

enum class DeltaClass { LogConcave, Flat, StrictlyLogConvex };

std::string_view to_string(DeltaClass c) noexcept;

struct DeltaClassification {
  std::uint64_t n = 0;
  unsigned d = 0;
  BigInt delta;
  DeltaClass cls = DeltaClass::Flat;

  bool is_exception() const noexcept {
    return cls == DeltaClass::StrictlyLogConvex;
  }
};

/// Sum of t^d over the positive divisors t of n.
BigInt sigma(std::uint64_t n, unsigned d);

/// sigma(j, d) for j = 1..n_max, computed with a divisor sieve. Index 0 of the
/// returned vector holds 0 so that entry j is sigma(j, d).
std::vector<BigInt> sigma_table(std::size_t n_max, unsigned d);

/// Coefficients via the logarithmic-derivative recurrence
///   n p(n) = sum_{j=1..n} c_j p(n-j),  c_j = sum_{t | j} t alpha_t.
CoeffRow compute_row(const ExponentSequence& seq, std::size_t n_max);

/// Continues `prefix` (which must have been built from `seq`) up to n_max.
/// Returns a copy of the prefix truncated when n_max is smaller.
CoeffRow extend_row(const CoeffRow& prefix, std::size_t n_max);

/// Largest n_max accepted by oracle_row.
inline constexpr std::size_t kOracleCap = 24;

/// Independent route: sums prod w(m_i) / k! over ordered compositions of n,
/// w(m) = c_m / m, grouping compositions by their multiset of parts. Exact
/// rational arithmetic; exponential in n_max.
CoeffRow oracle_row(const ExponentSequence& seq, std::size_t n_max,
                    std::size_t cap = kOracleCap);

/// p_d(n) for 0 <= n <= 8 from the explicit finite sums of powers b^{d-1}.
BigInt closed_form_pd(unsigned n, unsigned d);

/// Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1), classified by sign.
DeltaClassification delta(unsigned d, std::uint64_t n, const CoeffRow& row);

class RowCache;

/// Delta_d(n) computed from a row of length n+1 taken from `cache`, or from a
/// fresh row when `cache` is null.
DeltaClassification classify(unsigned d, std::uint64_t n,
                             RowCache* cache = nullptr);

/// Least d in (d_floor, d_cap] with Delta_d(n) < 0. An empty result says
/// nothing about d > d_cap.
std::optional<unsigned> find_first_exception(std::uint64_t n, unsigned d_floor,
                                             unsigned d_cap,
                                             RowCache* cache = nullptr);

}  // namespace logconcave

#endif  // LOGCONCAVE_SERIES_HPP_
