// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "logconcave/bounds.hpp"

namespace logconcave {

namespace {

namespace mp = boost::multiprecision;
using Float256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using Float512 = mp::number<mp::cpp_bin_float<512, mp::digit_base_2>, mp::et_off>;

constexpr double kNearIntegerGuard = 1e-9;

template <class T>
T evaluate(ConstantKind k, unsigned n) {
  using std::log;
  const T nn(n);
  const T one(1);
  const T two(2);
  const T three(3);
  const T ln98 = log(T(9) / T(8));
  // 5.67, 2.84 and 2.2 are taken as exact decimals.
  const T k567 = T(567) / T(100);
  const T k284 = T(284) / T(100);
  const T k22 = T(22) / T(10);
  switch (k) {
    case ConstantKind::C0:
      return one + two * (log(two) + log(nn / three) / three) / ln98 * nn;
    case ConstantKind::C1:
      return one + two * (log(two) + log((nn - one) / three) / three) / ln98 * nn;
    case ConstantKind::C2:
      return one + (log(three) + log((nn + one) / three) / three) / ln98 * nn;
    case ConstantKind::C1Tilde:
      return one + T(6) * (one + log(nn - one)) * nn;
    case ConstantKind::C2Tilde:
      return one + three * (three + log(nn + one)) * nn;
    case ConstantKind::C0Star:
      return one + k567 * (one + log(nn)) * nn;
    case ConstantKind::C1Star:
      return one + k567 * (one + log(nn - one)) * nn;
    case ConstantKind::C2Star:
      return one + k284 * (k22 + log(nn + one)) * nn;
  }
  throw std::logic_error("unknown constant kind");
}

void check_domain(ConstantKind k, unsigned n) {
  if (n < 6) {
    throw std::invalid_argument("threshold constants need n >= 6 (got n=" + std::to_string(n) +
                                ")");
  }
  if (n % 3 != residue_of(k)) {
    throw std::invalid_argument(std::string(to_string(k)) + " is defined for n = " +
                                std::to_string(residue_of(k)) + " mod 3, got n=" +
                                std::to_string(n));
  }
}

template <class T>
long long ceiling_of(ConstantKind k, unsigned n) {
  return static_cast<long long>(mp::ceil(evaluate<T>(k, n)));
}

}  // namespace

std::string_view to_string(ConstantKind k) noexcept {
  switch (k) {
    case ConstantKind::C0: return "C0";
    case ConstantKind::C1: return "C1";
    case ConstantKind::C2: return "C2";
    case ConstantKind::C1Tilde: return "C1_tilde";
    case ConstantKind::C2Tilde: return "C2_tilde";
    case ConstantKind::C0Star: return "C0_star";
    case ConstantKind::C1Star: return "C1_star";
    case ConstantKind::C2Star: return "C2_star";
  }
  return "?";
}

unsigned residue_of(ConstantKind k) noexcept {
  switch (k) {
    case ConstantKind::C0:
    case ConstantKind::C0Star: return 0;
    case ConstantKind::C1:
    case ConstantKind::C1Tilde:
    case ConstantKind::C1Star: return 1;
    default: return 2;
  }
}

Constant threshold_constant(ConstantKind k, unsigned n) {
  check_domain(k, n);
  Constant c;
  c.value = evaluate<double>(k, n);
  if (!std::isfinite(c.value) || c.value <= 0) {
    throw std::domain_error("non-finite threshold constant " + std::string(to_string(k)));
  }
  if (std::abs(c.value - std::round(c.value)) < kNearIntegerGuard) {
    c.ceiling = ceiling_of<Float256>(k, n);
  } else {
    c.ceiling = static_cast<long long>(std::ceil(c.value));
  }
  return c;
}

long long constant_ceiling(ConstantKind k, unsigned n, Precision p) {
  check_domain(k, n);
  switch (p) {
    case Precision::Double: return static_cast<long long>(std::ceil(evaluate<double>(k, n)));
    case Precision::Bits256: return ceiling_of<Float256>(k, n);
    case Precision::Bits512: return ceiling_of<Float512>(k, n);
  }
  throw std::logic_error("unknown precision");
}

const Constant& ThresholdConstants::c() const {
  switch (n % 3) {
    case 0: return *c0;
    case 1: return *c1;
    default: return *c2;
  }
}

const std::optional<Constant>& ThresholdConstants::c_tilde() const {
  static const std::optional<Constant> none;
  switch (n % 3) {
    case 1: return c1_tilde;
    case 2: return c2_tilde;
    default: return none;
  }
}

const Constant& ThresholdConstants::c_star() const {
  switch (n % 3) {
    case 0: return *c0_star;
    case 1: return *c1_star;
    default: return *c2_star;
  }
}

ThresholdConstants threshold_constants(unsigned n) {
  if (n < 6) {
    throw std::invalid_argument("threshold_constants: n must be >= 6 (got n=" +
                                std::to_string(n) + ")");
  }
  ThresholdConstants t;
  t.n = n;
  switch (n % 3) {
    case 0:
      t.c0 = threshold_constant(ConstantKind::C0, n);
      t.c0_star = threshold_constant(ConstantKind::C0Star, n);
      break;
    case 1:
      t.c1 = threshold_constant(ConstantKind::C1, n);
      t.c1_tilde = threshold_constant(ConstantKind::C1Tilde, n);
      t.c1_star = threshold_constant(ConstantKind::C1Star, n);
      break;
    default:
      t.c2 = threshold_constant(ConstantKind::C2, n);
      t.c2_tilde = threshold_constant(ConstantKind::C2Tilde, n);
      t.c2_star = threshold_constant(ConstantKind::C2Star, n);
      break;
  }
  return t;
}

long long certificate_threshold(unsigned n) {
  const auto t = threshold_constants(n);
  return t.c_tilde() ? t.c_tilde()->ceiling : t.c().ceiling;
}

DominanceReport dominance_check(unsigned from, unsigned to) {
  if (from < 6 || from > to || to > 1'000'000) {
    throw std::invalid_argument("dominance_check: need 6 <= from <= to <= 10^6");
  }
  DominanceReport r;
  r.from = from;
  r.to = to;
  for (unsigned n = from; n <= to; ++n) {
    const auto t = threshold_constants(n);
    const auto& c = t.c();
    const auto& star = t.c_star();
    const ConstantKind star_kind = n % 3 == 0   ? ConstantKind::C0Star
                                   : n % 3 == 1 ? ConstantKind::C1Star
                                                : ConstantKind::C2Star;
    ++r.checked;
    if (!(star.value > c.value)) r.violations.push_back({n, star_kind, c.value, star.value});
    if (const auto& tilde = t.c_tilde()) {
      const ConstantKind tk = n % 3 == 1 ? ConstantKind::C1Tilde : ConstantKind::C2Tilde;
      if (tilde->value > static_cast<double>(c.ceiling)) {
        r.tilde_exceeds.push_back({n, tk, tilde->value, c.ceiling});
      } else {
        r.tilde_not_exceeding.push_back(n);
      }
    }
  }
  return r;
}

std::vector<Figure2Row> figure2_data(unsigned from, unsigned to, unsigned step) {
  if (from < 6 || from > to || step == 0) {
    throw std::invalid_argument("figure2_data: need 6 <= from <= to and step >= 1");
  }
  std::vector<Figure2Row> rows;
  for (unsigned n = from; n <= to; n += step) {
    Figure2Row row;
    row.n = n;
    const auto t = threshold_constants(n);
    if (t.c1) row.c1 = t.c1->value;
    if (t.c2) row.c2 = t.c2->value;
    if (t.c1_tilde) row.c1_tilde = t.c1_tilde->value;
    if (t.c2_tilde) row.c2_tilde = t.c2_tilde->value;
    rows.push_back(row);
    if (to - n < step) break;
  }
  return rows;
}

}  // namespace logconcave
