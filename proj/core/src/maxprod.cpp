// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/maxprod.hpp"

#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace logconcave {

namespace {

BigInt pow3(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

// Exact max product for every budget r <= kSpectrumCap, used as a pruning
// bound. 3^20 fits comfortably in 64 bits.
std::uint64_t max_product_u64(unsigned r) {
  if (r <= 1) return 1;
  std::uint64_t p = 1;
  switch (r % 3) {
    case 0: for (unsigned i = 0; i < r / 3; ++i) p *= 3; break;
    case 1: p = 4; for (unsigned i = 0; i < (r - 4) / 3; ++i) p *= 3; break;
    default: p = 2; for (unsigned i = 0; i < (r - 2) / 3; ++i) p *= 3; break;
  }
  return p;
}

}  // namespace

std::string_view to_string(ProductRank r) noexcept {
  switch (r) {
    case ProductRank::Max: return "Max";
    case ProductRank::SecondMax: return "SecondMax";
    case ProductRank::ThirdMax: return "ThirdMax";
    case ProductRank::Lower: return "Lower";
  }
  return "?";
}

BigInt max_product_closed(unsigned n) {
  if (n < 2) throw std::invalid_argument("max_product_closed: n must be >= 2");
  switch (n % 3) {
    case 0: return pow3(n / 3);
    case 1: return 4 * pow3((n - 4) / 3);
    default: return 2 * pow3((n - 2) / 3);
  }
}

BigInt second_max_product_closed(unsigned n) {
  if (n < 8 || n % 3 != 2) {
    throw std::invalid_argument("second_max_product_closed: requires n >= 8, n = 2 mod 3 (got n=" +
                                std::to_string(n) + ")");
  }
  return 16 * pow3((n - 8) / 3);
}

std::vector<PartitionProductRecord> product_spectrum(unsigned n, std::size_t top_k) {
  if (n < 2) throw std::invalid_argument("product_spectrum: n must be >= 2");
  if (n > kSpectrumCap) {
    throw std::invalid_argument("product_spectrum: n=" + std::to_string(n) +
                                " exceeds the enumeration bound " +
                                std::to_string(kSpectrumCap));
  }
  if (top_k == 0) throw std::invalid_argument("product_spectrum: top_k must be >= 1");

  // value -> witnesses, holding at most top_k distinct values.
  std::map<std::uint64_t, std::vector<std::vector<unsigned>>, std::greater<>> best;
  std::vector<unsigned> parts;

  auto floor_value = [&]() -> std::uint64_t {
    return best.size() < top_k ? 0 : best.rbegin()->first;
  };

  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part,
                 std::uint64_t product) -> void {
    if (remaining == 0) {
      if (product < floor_value()) return;
      best[product].push_back(parts);
      if (best.size() > top_k) best.erase(std::prev(best.end()));
      return;
    }
    // Parts are capped by max_part, so the unrestricted max product of the
    // remaining budget is an upper bound for this branch.
    if (product * max_product_u64(remaining) < floor_value()) return;
    for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part, product * part);
      parts.pop_back();
    }
  };
  rec(rec, n, n, 1);

  std::vector<PartitionProductRecord> out;
  std::size_t position = 1;
  for (auto& [value, witnesses] : best) {
    PartitionProductRecord r;
    r.n = n;
    r.position = position;
    r.rank = position == 1   ? ProductRank::Max
             : position == 2 ? ProductRank::SecondMax
             : position == 3 ? ProductRank::ThirdMax
                             : ProductRank::Lower;
    r.value = BigInt(static_cast<unsigned long>(value));
    r.witnesses = std::move(witnesses);
    out.push_back(std::move(r));
    ++position;
  }
  return out;
}

unsigned max_witness_multiplicity(unsigned n) {
  if (n < 2) throw std::invalid_argument("max_witness_multiplicity: n must be >= 2");
  // {4} and {2,2} tie for every n = 1 mod 3 once a 4 fits.
  return (n % 3 == 1 && n >= 4) ? 2 : 1;
}

unsigned max_witness_multiplicity_oracle(unsigned n) {
  return static_cast<unsigned>(product_spectrum(n, 1).front().witnesses.size());
}

}  // namespace logconcave
