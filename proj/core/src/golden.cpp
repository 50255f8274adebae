// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/golden.hpp"

#include <stdexcept>
#include <string>

namespace logconcave::golden {

std::set<std::uint64_t> table1_exceptions(unsigned d, std::uint64_t n_max) {
  std::set<std::uint64_t> out;
  auto odd_up_to = [&](std::uint64_t last) {
    for (std::uint64_t n = 1; n <= last && n <= n_max; n += 2) out.insert(n);
  };
  auto listed = [&](std::initializer_list<std::uint64_t> ns) {
    for (auto n : ns) {
      if (n <= n_max) out.insert(n);
    }
  };
  switch (d) {
    case 1: odd_up_to(25); break;
    case 2: odd_up_to(11); break;
    case 3: odd_up_to(7); break;
    case 4:
    case 5: listed({1, 5}); break;
    case 6:
    case 7:
    case 8: listed({1, 4, 5}); break;
    default:
      throw std::invalid_argument("table1_exceptions: tabulated only for d = 1..8, got " +
                                  std::to_string(d));
  }
  return out;
}

bool theorem_small_n_exception(unsigned n, unsigned d) {
  if (d == 0) throw std::invalid_argument("theorem_small_n_exception: d must be >= 1");
  switch (n) {
    case 1: return true;
    case 2: return false;
    case 3: return d <= 3;
    case 4: return d >= 6;
    case 5: return d <= 9;
    case 6: return false;
    case 7: return d <= 3 || d >= 11;
    case 8: return d >= 9;
    case 9: return d <= 2;
    default:
      throw std::invalid_argument("theorem_small_n_exception: n must be in 1..9, got " +
                                  std::to_string(n));
  }
}

}  // namespace logconcave::golden
