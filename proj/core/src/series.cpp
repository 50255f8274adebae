// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/series.hpp"

#include <iostream>
#include <sstream>
#include <utility>

#include "logconcave/row_cache.hpp"

namespace logconcave {

namespace {

BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt require_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    std::ostringstream os;
    os << what << ": expected an integer, got " << q.get_str();
    throw ExactnessError(os.str());
  }
  return q.get_num();
}

// c_j = sum_{t | j} t * alpha_t for j = 1..n_max (index 0 unused).
std::vector<BigInt> log_derivative_weights(const ExponentSequence& seq,
                                           std::size_t n_max) {
  if (seq.is_power()) return sigma_table(n_max, seq.d());
  std::vector<BigInt> c(n_max + 1, 0);
  for (std::size_t t = 1; t <= n_max; ++t) {
    BigInt term = seq(t);
    if (term == 0) continue;
    term *= static_cast<unsigned long>(t);
    for (std::size_t m = t; m <= n_max; m += t) c[m] += term;
  }
  return c;
}

void continue_recurrence(std::vector<BigInt>& p,
                         const std::vector<BigInt>& c,
                         std::size_t n_max) {
  BigInt acc;
  p.reserve(n_max + 1);
  for (std::size_t n = p.size(); n <= n_max; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), p[n - j].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      std::ostringstream os;
      os << "recurrence: sum at n=" << n << " is not divisible by n";
      throw ExactnessError(os.str());
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
    p.push_back(acc);
  }
}

// Calls fn(parts, mult) for every partition of n given as distinct parts in
// decreasing order with their multiplicities.
template <class Fn>
void for_each_partition(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> parts;
  std::vector<std::size_t> mult;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      fn(parts, mult);
      return;
    }
    for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
      for (std::size_t e = 1; e * part <= remaining; ++e) {
        parts.push_back(part);
        mult.push_back(e);
        self(self, remaining - e * part, part - 1);
        parts.pop_back();
        mult.pop_back();
      }
    }
  };
  rec(rec, n, n);
}

}  // namespace

ExponentSequence ExponentSequence::power(unsigned d) {
  if (d == 0) throw std::invalid_argument("power family requires d >= 1");
  ExponentSequence s;
  s.d_ = d;
  s.label_ = "power(d=" + std::to_string(d) + ")";
  return s;
}

ExponentSequence ExponentSequence::custom(Rule rule, std::string label) {
  if (!rule) throw std::invalid_argument("custom exponent rule is empty");
  ExponentSequence s;
  s.rule_ = std::move(rule);
  s.label_ = std::move(label);
  return s;
}

ExponentSequence ExponentSequence::from_values(std::vector<BigInt> values,
                                               std::string label) {
  auto table = std::make_shared<const std::vector<BigInt>>(std::move(values));
  return custom(
      [table](std::uint64_t n) -> BigInt {
        if (n == 0 || n > table->size()) {
          throw std::out_of_range("exponent table has no entry for n=" +
                                  std::to_string(n) + " (table length " +
                                  std::to_string(table->size()) + ")");
        }
        return (*table)[n - 1];
      },
      std::move(label));
}

BigInt ExponentSequence::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("exponent sequence is indexed from n=1");
  if (is_power()) return pow_ui(n, d_ - 1);
  BigInt v = rule_(n);
  if (v < 0) {
    throw std::domain_error("exponent rule '" + label_ + "' returned negative value " +
                            v.get_str() + " at n=" + std::to_string(n));
  }
  return v;
}

std::string ExponentSequence::describe() const { return label_; }

std::string_view to_string(DeltaClass c) noexcept {
  switch (c) {
    case DeltaClass::LogConcave: return "LogConcave";
    case DeltaClass::Flat: return "Flat";
    case DeltaClass::StrictlyLogConvex: return "StrictlyLogConvex";
  }
  return "?";
}

BigInt sigma(std::uint64_t n, unsigned d) {
  if (n == 0) throw std::invalid_argument("sigma: n must be >= 1");
  BigInt s = 0;
  for (std::uint64_t t = 1; t * t <= n; ++t) {
    if (n % t != 0) continue;
    s += pow_ui(t, d);
    std::uint64_t other = n / t;
    if (other != t) s += pow_ui(other, d);
  }
  return s;
}

std::vector<BigInt> sigma_table(std::size_t n_max, unsigned d) {
  std::vector<BigInt> table(n_max + 1, 0);
  for (std::size_t t = 1; t <= n_max; ++t) {
    const BigInt term = pow_ui(t, d);
    for (std::size_t m = t; m <= n_max; m += t) table[m] += term;
  }
  return table;
}

CoeffRow compute_row(const ExponentSequence& seq, std::size_t n_max) {
  CoeffRow row{seq, {BigInt(1)}};
  if (n_max == 0) return row;
  const auto c = log_derivative_weights(seq, n_max);
  continue_recurrence(row.coeffs, c, n_max);
  return row;
}

CoeffRow extend_row(const CoeffRow& prefix, std::size_t n_max) {
  CoeffRow row{prefix.seq, {}};
  if (n_max <= prefix.n_max()) {
    row.coeffs.assign(prefix.coeffs.begin(),
                      prefix.coeffs.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
    return row;
  }
  row.coeffs = prefix.coeffs;
  const auto c = log_derivative_weights(prefix.seq, n_max);
  continue_recurrence(row.coeffs, c, n_max);
  return row;
}

CoeffRow oracle_row(const ExponentSequence& seq, std::size_t n_max,
                    std::size_t cap) {
  if (n_max > cap) {
    throw std::invalid_argument(
        "oracle_row: n_max=" + std::to_string(n_max) + " exceeds the enumeration cap " +
        std::to_string(cap) + "; use compute_row for larger rows");
  }
  // w(m) = (sum_{t | m} t alpha_t) / m, built by direct divisor scan so the
  // oracle shares nothing with the sieve used by compute_row.
  std::vector<Rational> w(n_max + 1);
  for (std::size_t m = 1; m <= n_max; ++m) {
    BigInt c = 0;
    for (std::size_t t = 1; t <= m; ++t) {
      if (m % t == 0) c += BigInt(static_cast<unsigned long>(t)) * seq(t);
    }
    w[m] = Rational(c, static_cast<unsigned long>(m));
    w[m].canonicalize();
  }

  std::vector<BigInt> factorial(n_max + 1, 1);
  for (std::size_t k = 1; k <= n_max; ++k) factorial[k] = factorial[k - 1] * static_cast<unsigned long>(k);

  CoeffRow row{seq, {BigInt(1)}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational total = 0;
    // An ordered composition with multiset {m^e_m} appears k!/prod e_m!
    // times, so its 1/k! weight collapses to 1/prod e_m!.
    for_each_partition(n, [&](const std::vector<std::size_t>& parts,
                              const std::vector<std::size_t>& mult) {
      Rational term = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational f;
        mpq_class base = w[parts[i]];
        mpz_pow_ui(f.get_num_mpz_t(), base.get_num_mpz_t(), mult[i]);
        mpz_pow_ui(f.get_den_mpz_t(), base.get_den_mpz_t(), mult[i]);
        f /= Rational(factorial[mult[i]]);
        term *= f;
      }
      total += term;
    });
    total.canonicalize();
    row.coeffs.push_back(require_integer(total, "oracle_row"));
  }
  return row;
}

BigInt closed_form_pd(unsigned n, unsigned d) {
  if (d == 0) throw std::invalid_argument("closed_form_pd: d must be >= 1");
  if (n > 8) {
    throw std::invalid_argument("closed_form_pd: no closed form for n=" +
                                std::to_string(n) + " (only 0..8)");
  }
  const unsigned e = d - 1;
  auto pw = [e](unsigned long b) { return Rational(pow_ui(b, e)); };
  auto frac = [](long num, long den) { return Rational(num, den); };

  // Each p_d(n) adds a finite sum of b^{d-1} terms to p_d(n-1).
  Rational p = 1;
  if (n <= 1) return 1;
  p += pw(2);
  if (n == 2) return require_integer(p, "closed_form_pd(2)");
  p += pw(3);
  if (n == 3) return require_integer(p, "closed_form_pd(3)");
  p += frac(3, 2) * pw(4) + frac(1, 2) * pw(2);
  if (n == 4) return require_integer(p, "closed_form_pd(4)");
  p += pw(5) + pw(6);
  if (n == 5) return require_integer(p, "closed_form_pd(5)");
  p += frac(1, 2) * pw(9) + frac(7, 6) * pw(8) + pw(6) + frac(1, 2) * pw(4) +
       frac(1, 2) * pw(3) + frac(1, 3) * pw(2);
  if (n == 6) return require_integer(p, "closed_form_pd(6)");
  p += frac(3, 2) * pw(12) + pw(10) + pw(7) + frac(1, 2) * pw(6);
  if (n == 7) return require_integer(p, "closed_form_pd(7)");
  p += frac(1, 2) * pw(18) + frac(25, 24) * pw(16) + pw(15) + pw(12) +
       frac(7, 4) * pw(8) + frac(1, 2) * pw(6) + frac(23, 24) * pw(4) +
       frac(1, 4) * pw(2);
  return require_integer(p, "closed_form_pd(8)");
}

DeltaClassification delta(unsigned d, std::uint64_t n, const CoeffRow& row) {
  if (n == 0) throw std::invalid_argument("delta: n must be >= 1");
  if (!row.seq.is_power() || row.seq.d() != d) {
    throw std::invalid_argument("delta: row was built from " + row.seq.describe() +
                                ", expected power(d=" + std::to_string(d) + ")");
  }
  if (row.n_max() < n + 1) {
    throw std::invalid_argument("delta: row covers n<=" + std::to_string(row.n_max()) +
                                " but Delta at n=" + std::to_string(n) +
                                " needs n+1");
  }
  DeltaClassification out;
  out.n = n;
  out.d = d;
  out.delta = row.coeffs[n] * row.coeffs[n];
  mpz_submul(out.delta.get_mpz_t(), row.coeffs[n - 1].get_mpz_t(),
             row.coeffs[n + 1].get_mpz_t());
  const int s = sgn(out.delta);
  out.cls = s > 0 ? DeltaClass::LogConcave
                  : (s < 0 ? DeltaClass::StrictlyLogConvex : DeltaClass::Flat);
  if (out.cls == DeltaClass::Flat) {
    std::clog << "logconcave: WARNING Delta_" << d << "(" << n
              << ") == 0 (flat point)\n";
  }
  return out;
}

DeltaClassification classify(unsigned d, std::uint64_t n, RowCache* cache) {
  if (cache != nullptr) return delta(d, n, *cache->power_row(d, n + 1));
  return delta(d, n, compute_row(ExponentSequence::power(d), n + 1));
}

std::optional<unsigned> find_first_exception(std::uint64_t n, unsigned d_floor,
                                             unsigned d_cap, RowCache* cache) {
  if (d_floor > d_cap) {
    throw std::invalid_argument("find_first_exception: d_floor > d_cap");
  }
  for (unsigned d = d_floor + 1; d <= d_cap; ++d) {
    if (classify(d, n, cache).is_exception()) return d;
  }
  return std::nullopt;
}

}  // namespace logconcave
