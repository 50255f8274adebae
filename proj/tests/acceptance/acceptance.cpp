// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "logconcave/bounds.hpp"
#include "logconcave/golden.hpp"
#include "logconcave/maxprod.hpp"
#include "logconcave/row_cache.hpp"
#include "logconcave/series.hpp"
#include "logconcave/verify.hpp"

using namespace logconcave;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    o.ok = false;
    o.note += (o.note.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-52s %8.2fs / %gs%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

Outcome from_report(const VerificationReport& r) {
  Outcome o{is_success(r.status), std::string(to_string(r.status))};
  for (const auto& c : r.details) {
    if (!c.holds) o.note += "; " + c.claim;
  }
  return o;
}

}  // namespace

int main() {
  RowCache cache;
  VerifyOptions opts;
  opts.cache = &cache;

  criterion(1, "Reference rows d=1..3, n<=10", 1, [] {
    for (unsigned d = 1; d <= 3; ++d) {
      const auto row = compute_row(ExponentSequence::power(d), 10);
      for (std::size_t n = 0; n <= 10; ++n) {
        if (row[n] != golden::kTable2[d - 1][n]) {
          return Outcome{false, "p_" + std::to_string(d) + "(" + std::to_string(n) + ")"};
        }
      }
    }
    return Outcome{true, "p_3(10)=8813"};
  });

  criterion(2, "Reference landscape(20, 26) cell-for-cell", 30, [&] {
    const auto grid = landscape(golden::kTable4DMax, golden::kTable4NMax, opts);
    std::size_t bullets = 0;
    for (unsigned n = 1; n <= golden::kTable4NMax; ++n) {
      for (unsigned d = 1; d <= golden::kTable4DMax; ++d) {
        if (grid.is_exception(n, d) != golden::table4_exception(n, d)) {
          return Outcome{false, "cell n=" + std::to_string(n) + " d=" + std::to_string(d)};
        }
        bullets += grid.is_exception(n, d);
      }
    }
    return Outcome{true, std::to_string(bullets) + " bullets, 520 cells"};
  });

  criterion(3, "Reference exception sets, d=1..8, n<=2000", 600, [&] {
    const auto grid = landscape(8, 2000, opts);
    for (unsigned d = 1; d <= 8; ++d) {
      if (grid.exceptions_for_d(d) != golden::table1_exceptions(d, 2000)) {
        return Outcome{false, "d=" + std::to_string(d)};
      }
    }
    return from_report(table1_suite(2000, opts));
  });

  criterion(4, "Strict log-convexity for n=1..9, d<=200", 60,
            [&] { return from_report(theorem_eins_suite(200, opts)); });

  criterion(5, "Sign iffs for n<=7 and crossovers, d<=120", 60,
            [&] { return from_report(corollary_suite(120, opts)); });

  criterion(6, "Boundary cases n=8, n=9 and 288/270 crossover", 60,
            [&] { return from_report(boundary_case_suite(opts)); });

  criterion(7, "Reference threshold ceilings (36 values)", 1, [] { return from_report(table3_suite()); });

  criterion(8, "Max-product closed forms vs spectra, n=2..60", 60, [] {
    for (unsigned n = 2; n <= kSpectrumCap; ++n) {
      const auto s = product_spectrum(n, 2);
      if (s[0].value != max_product_closed(n)) return Outcome{false, "rank 1 at n=" + std::to_string(n)};
      if (n >= 8 && n % 3 == 2 && s[1].value != second_max_product_closed(n)) {
        return Outcome{false, "rank 2 at n=" + std::to_string(n)};
      }
    }
    const auto eight = product_spectrum(8, 3);
    if (eight.size() != 3 || eight[0].value != 18 || eight[1].value != 16 || eight[2].value != 15) {
      return Outcome{false, "product_spectrum(8,3)"};
    }
    return Outcome{true, "product_spectrum(8,3)=[18,16,15]"};
  });

  criterion(9, "Oracle equivalence, closed forms, bound sandwich", 120, [] {
    for (unsigned d : {1u, 2u, 3u, 5u, 10u}) {
      const auto seq = ExponentSequence::power(d);
      if (compute_row(seq, 20).coeffs != oracle_row(seq, 20).coeffs) {
        return Outcome{false, "oracle d=" + std::to_string(d)};
      }
    }
    std::mt19937_64 rng(20221);
    std::uniform_int_distribution<int> dist(0, 15);
    for (int t = 0; t < 20; ++t) {
      std::vector<BigInt> values(20);
      for (auto& v : values) v = dist(rng);
      const auto seq = ExponentSequence::from_values(values);
      if (compute_row(seq, 20).coeffs != oracle_row(seq, 20).coeffs) {
        return Outcome{false, "oracle custom #" + std::to_string(t)};
      }
    }
    for (unsigned d = 1; d <= 64; ++d) {
      const auto row = compute_row(ExponentSequence::power(d), 8);
      for (unsigned n = 0; n <= 8; ++n) {
        if (closed_form_pd(n, d) != row[n]) {
          return Outcome{false, "closed form n=" + std::to_string(n) + " d=" + std::to_string(d)};
        }
      }
    }
    const auto p1 = compute_row(ExponentSequence::power(1), 60);
    for (unsigned d = 1; d <= 15; ++d) {
      const auto row = compute_row(ExponentSequence::power(d), 60);
      for (unsigned n = 2; n <= 60; ++n) {
        const auto b = pd_bounds(n, d, p1);
        const Rational v(row[n]);
        if (!(b.lower < v && v <= b.upper && (!b.improved_upper || v <= *b.improved_upper))) {
          return Outcome{false, "sandwich n=" + std::to_string(n) + " d=" + std::to_string(d)};
        }
      }
    }
    return Outcome{true, "5 power + 20 custom rows, 64x9 closed forms, 59x15 sandwiches"};
  });

  criterion(10, "Threshold certificates close, 6<=n<=40", 300, [] {
    const auto p1 = compute_row(ExponentSequence::power(1), 41);
    for (unsigned n = 6; n <= 40; ++n) {
      const auto d = static_cast<unsigned>(certificate_threshold(n));
      const auto cert = bound_ratio_certificate(n, d, p1);
      const auto want = n % 3 == 0 ? Certificate::CertifiedPositive : Certificate::CertifiedNegative;
      const auto cls = delta(d, n, compute_row(ExponentSequence::power(d), n + 1)).cls;
      const auto exact = cls == DeltaClass::LogConcave ? Certificate::CertifiedPositive
                                                        : Certificate::CertifiedNegative;
      if (cert != want || exact != want) {
        return Outcome{false, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " certificate " +
                                  std::string(to_string(cert))};
      }
    }
    return Outcome{true, "35 values of n"};
  });

  criterion(11, "Conjecture scans, n<=200, d<=60", 600, [&] {
    const auto r = conjecture_scan(200, 60, opts);
    Outcome o{r.status != Status::Fail, std::string(to_string(r.status))};
    const auto w = r.all_witnesses();
    if (!w.empty()) o.note += ", " + std::to_string(w.size()) + " counterexample(s) surfaced";
    return o;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
