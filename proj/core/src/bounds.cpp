// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/bounds.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace logconcave {

namespace {

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt pow_ui(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Rational make(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_p1(const CoeffRow& p1_row, unsigned n) {
  if (!p1_row.seq.is_power() || p1_row.seq.d() != 1) {
    throw std::invalid_argument("bounds need the power(d=1) row, got " + p1_row.seq.describe());
  }
  if (p1_row.n_max() < n) {
    throw std::invalid_argument("bounds: p_1 row covers n<=" + std::to_string(p1_row.n_max()) +
                                ", need n=" + std::to_string(n));
  }
}

}  // namespace

Rational BoundSet::tightest_upper() const {
  if (improved_upper && *improved_upper < upper) return *improved_upper;
  return upper;
}

BoundSet pd_bounds(unsigned n, unsigned d, const CoeffRow& p1_row) {
  if (n < 2) throw std::invalid_argument("pd_bounds: n must be >= 2");
  if (d == 0) throw std::invalid_argument("pd_bounds: d must be >= 1");
  if (n % 3 == 1 && n < 4) {
    throw std::invalid_argument("pd_bounds: n = 1 (mod 3) needs n >= 4");
  }
  require_p1(p1_row, n);
  const BigInt& p1 = p1_row[n];
  const unsigned long e = d - 1;

  BoundSet b;
  b.n = n;
  b.d = d;
  b.residue = n % 3;
  switch (b.residue) {
    case 0: {
      const BigInt top = pow_ui(pow_ui(3UL, n / 3), e);
      b.lower = make(top, factorial(n / 3));
      b.upper = Rational(top * p1);
      break;
    }
    case 1: {
      // Both {4,3,...,3} and {2,2,3,...,3} attain the maximum.
      const unsigned k = (n - 4) / 3;
      const BigInt top = pow_ui(4 * pow_ui(3UL, k), e);
      b.lower = make(3 * top, 2 * factorial(k));
      b.upper = Rational(top * p1);
      break;
    }
    default: {
      const unsigned k = (n - 2) / 3;
      const BigInt top = pow_ui(2 * pow_ui(3UL, k), e);
      b.lower = make(top, factorial(k));
      b.upper = Rational(top * p1);
      if (n >= 8) {
        const BigInt second = pow_ui(16 * pow_ui(3UL, (n - 8) / 3), e);
        b.improved_upper = b.lower + Rational(second * p1);
      }
      break;
    }
  }
  return b;
}

N8SpecialBounds n8_special_bounds(unsigned d) {
  if (d == 0) throw std::invalid_argument("n8_special_bounds: d must be >= 1");
  const unsigned long e = d - 1;
  auto pw = [e](unsigned long b) { return Rational(pow_ui(b, e)); };
  N8SpecialBounds s;
  s.p7_lower = Rational(3, 2) * pw(12);
  s.p8_upper = Rational(1, 2) * pw(18) + Rational(25, 24) * pw(16) + 21 * pw(15);
  s.p9_lower = Rational(1, 6) * pw(27) + Rational(7, 6) * pw(24);
  return s;
}

std::string_view to_string(Certificate c) noexcept {
  switch (c) {
    case Certificate::CertifiedPositive: return "CertifiedPositive";
    case Certificate::CertifiedNegative: return "CertifiedNegative";
    case Certificate::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Certificate bound_ratio_certificate(unsigned n, unsigned d, const CoeffRow& p1_row) {
  if (n < 6) throw std::invalid_argument("bound_ratio_certificate: n must be >= 6");
  require_p1(p1_row, n + 1);

  if (n == 8) {
    const auto s = n8_special_bounds(d);
    return s.p8_upper * s.p8_upper < s.p7_lower * s.p9_lower ? Certificate::CertifiedNegative
                                                              : Certificate::Inconclusive;
  }

  const BoundSet here = pd_bounds(n, d, p1_row);
  const BoundSet below = pd_bounds(n - 1, d, p1_row);
  const BoundSet above = pd_bounds(n + 1, d, p1_row);
  if (here.residue == 0) {
    return here.lower * here.lower > below.tightest_upper() * above.tightest_upper()
               ? Certificate::CertifiedPositive
               : Certificate::Inconclusive;
  }
  const Rational up = here.tightest_upper();
  return up * up < below.lower * above.lower ? Certificate::CertifiedNegative
                                             : Certificate::Inconclusive;
}

void write_figure2_csv(std::ostream& os, const std::vector<Figure2Row>& rows) {
  auto cell = [&os](const std::optional<double>& v) {
    os << ',';
    if (v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.15g", *v);
      os << buf;
    }
  };
  os << "n,C1,C2,C1_tilde,C2_tilde\n";
  for (const auto& r : rows) {
    os << r.n;
    cell(r.c1);
    cell(r.c2);
    cell(r.c1_tilde);
    cell(r.c2_tilde);
    os << '\n';
  }
}

}  // namespace logconcave
