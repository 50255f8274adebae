// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_MAXPROD_HPP_
#define LOGCONCAVE_MAXPROD_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "logconcave/series.hpp"

namespace logconcave {

// Largest products m_1 * ... * m_k over partitions m_1 + ... + m_k = n.

enum class ProductRank { Max, SecondMax, ThirdMax, Lower };

std::string_view to_string(ProductRank r) noexcept;

struct PartitionProductRecord {
  unsigned n = 0;
  ProductRank rank = ProductRank::Max;
  /// 1-based position among distinct product values.
  std::size_t position = 1;
  BigInt value;
  /// Every partition (parts non-increasing) whose product equals `value`.
  std::vector<std::vector<unsigned>> witnesses;
};

inline constexpr unsigned kSpectrumCap = 60;

/// 3^{n/3}, 4*3^{(n-4)/3} or 2*3^{(n-2)/3} by n mod 3. Requires n >= 2.
BigInt max_product_closed(unsigned n);

/// 16*3^{(n-8)/3}. Requires n >= 8 and n = 2 (mod 3).
BigInt second_max_product_closed(unsigned n);

/// The top_k distinct product values over all partitions of n, in decreasing
/// order, each with its complete witness list. Enumerates partitions with
/// non-increasing parts and prunes branches that cannot reach the current
/// k-th value. Requires 2 <= n <= kSpectrumCap.
std::vector<PartitionProductRecord> product_spectrum(unsigned n, std::size_t top_k);

/// Number of distinct multisets achieving the maximum product, from the
/// structure of maximizers (1 for n = 0, 2 mod 3 and 2 for n = 1 mod 3, n >= 4).
unsigned max_witness_multiplicity(unsigned n);

/// Same count read off product_spectrum(n, 1).
unsigned max_witness_multiplicity_oracle(unsigned n);

}  // namespace logconcave

#endif  // LOGCONCAVE_MAXPROD_HPP_
