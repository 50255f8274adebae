// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "logconcave/bounds.hpp"
#include "logconcave/golden.hpp"

namespace logconcave {
namespace {

const CoeffRow& p1() {
  static const CoeffRow row = compute_row(ExponentSequence::power(1), 64);
  return row;
}

TEST(Bounds, Sandwich) {
  for (unsigned d = 1; d <= 15; ++d) {
    const auto row = compute_row(ExponentSequence::power(d), 60);
    for (unsigned n = 2; n <= 60; ++n) {
      const auto b = pd_bounds(n, d, p1());
      const Rational actual(row[n]);
      EXPECT_LT(b.lower, actual) << "n=" << n << " d=" << d;
      EXPECT_LE(actual, b.upper) << "n=" << n << " d=" << d;
      if (b.improved_upper) EXPECT_LE(actual, *b.improved_upper) << "n=" << n << " d=" << d;
      EXPECT_EQ(b.improved_upper.has_value(), n % 3 == 2 && n >= 8) << n;
      EXPECT_EQ(b.residue, n % 3);
    }
  }
}

TEST(Bounds, Validation) {
  EXPECT_THROW(pd_bounds(1, 2, p1()), std::invalid_argument);
  EXPECT_THROW(pd_bounds(5, 0, p1()), std::invalid_argument);
  EXPECT_THROW(pd_bounds(80, 2, p1()), std::invalid_argument);
  EXPECT_THROW(pd_bounds(5, 2, compute_row(ExponentSequence::power(2), 10)), std::invalid_argument);
  EXPECT_THROW(bound_ratio_certificate(5, 2, p1()), std::invalid_argument);
}

TEST(Bounds, SpecialEightBoundsHold) {
  for (unsigned d = 1; d <= 60; ++d) {
    const auto row = compute_row(ExponentSequence::power(d), 9);
    const auto s = n8_special_bounds(d);
    EXPECT_GT(Rational(row[7]), s.p7_lower) << d;
    EXPECT_LT(Rational(row[8]), s.p8_upper) << d;
    EXPECT_GT(Rational(row[9]), s.p9_lower) << d;
  }
}

TEST(Certificate, Examples) {
  EXPECT_EQ(bound_ratio_certificate(9, 163, p1()), Certificate::CertifiedPositive);
  EXPECT_EQ(bound_ratio_certificate(8, 126, p1()), Certificate::CertifiedNegative);
  EXPECT_EQ(bound_ratio_certificate(7, 119, p1()), Certificate::CertifiedNegative);
  EXPECT_EQ(bound_ratio_certificate(9, 3, p1()), Certificate::Inconclusive);
  EXPECT_EQ(certificate_threshold(9), 163);
  EXPECT_EQ(certificate_threshold(7), 119);
  EXPECT_EQ(certificate_threshold(8), 126);
}

TEST(Certificate, NeverContradictsExactSign) {
  for (unsigned d = 1; d <= 70; ++d) {
    const auto row = compute_row(ExponentSequence::power(d), 22);
    for (unsigned n = 6; n <= 21; ++n) {
      const auto cert = bound_ratio_certificate(n, d, p1());
      const auto cls = delta(d, n, row).cls;
      if (cert == Certificate::CertifiedPositive) EXPECT_EQ(cls, DeltaClass::LogConcave) << n << ' ' << d;
      if (cert == Certificate::CertifiedNegative) EXPECT_EQ(cls, DeltaClass::StrictlyLogConvex) << n << ' ' << d;
    }
  }
}

TEST(Constants, ReferenceCeilings) {
  for (const auto& row : golden::kTable3) {
    EXPECT_EQ(threshold_constant(ConstantKind::C1, row.n1).ceiling, row.c1) << row.n1;
    EXPECT_EQ(threshold_constant(ConstantKind::C1Tilde, row.n1).ceiling, row.c1_tilde) << row.n1;
    EXPECT_EQ(threshold_constant(ConstantKind::C2, row.n2).ceiling, row.c2) << row.n2;
    EXPECT_EQ(threshold_constant(ConstantKind::C2Tilde, row.n2).ceiling, row.c2_tilde) << row.n2;
  }
}

TEST(Constants, GuardAgreesWithHighPrecision) {
  for (unsigned n = 6; n <= 3000; ++n) {
    for (auto k : {ConstantKind::C0, ConstantKind::C1, ConstantKind::C2, ConstantKind::C1Tilde,
                   ConstantKind::C2Tilde, ConstantKind::C0Star, ConstantKind::C1Star,
                   ConstantKind::C2Star}) {
      if (residue_of(k) != n % 3) continue;
      EXPECT_EQ(threshold_constant(k, n).ceiling, constant_ceiling(k, n, Precision::Bits512))
          << to_string(k) << " n=" << n;
    }
  }
}

TEST(Constants, ResidueApplicability) {
  const auto t = threshold_constants(9);
  EXPECT_TRUE(t.c0 && t.c0_star);
  EXPECT_FALSE(t.c1 || t.c2 || t.c1_tilde || t.c2_tilde);
  EXPECT_FALSE(t.c_tilde().has_value());
  EXPECT_EQ(t.c().ceiling, 163);
  EXPECT_THROW(threshold_constants(5), std::invalid_argument);
  EXPECT_THROW(threshold_constant(ConstantKind::C1, 9), std::invalid_argument);
}

TEST(Dominance, StarConstantsDominate) {
  const auto wide = dominance_check(6, 59);
  EXPECT_TRUE(wide.star_dominates());
  EXPECT_EQ(wide.checked, 54u);

  const auto seven = dominance_check(7, 7);
  ASSERT_EQ(seven.tilde_exceeds.size(), 1u);
  EXPECT_EQ(seven.tilde_exceeds[0].c_ceiling, 111);
  EXPECT_GT(seven.tilde_exceeds[0].tilde_value, 118.0);

  EXPECT_TRUE(dominance_check(6, 6).star_dominates());
  EXPECT_TRUE(dominance_check(6, 100000).star_dominates());
  EXPECT_THROW(dominance_check(5, 9), std::invalid_argument);
}

TEST(Figure2, CsvShape) {
  const auto rows = figure2_data(7, 9);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].c1 && rows[0].c1_tilde);
  EXPECT_FALSE(rows[0].c2);
  EXPECT_TRUE(rows[1].c2 && rows[1].c2_tilde);
  EXPECT_FALSE(rows[2].c1 || rows[2].c2);
  std::ostringstream os;
  write_figure2_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,C1,C2,C1_tilde,C2_tilde");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("7,110.85", 0), 0u) << line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line, "9,,,,");
  EXPECT_EQ(figure2_data(7, 59, 3).size(), 18u);
}

}  // namespace
}  // namespace logconcave
