// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_GOLDEN_HPP_
#define LOGCONCAVE_GOLDEN_HPP_

#include <array>
#include <cstdint>
#include <set>
#include <string_view>

// Reference data, transcribed once and used as regression targets.
namespace logconcave::golden {

/// p_d(0..10) for d = 1, 2, 3.
inline constexpr std::array<std::array<std::uint64_t, 11>, 3> kTable2 = {{
    {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42},
    {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500},
    {1, 1, 5, 14, 40, 101, 266, 649, 1593, 3765, 8813},
}};

struct Table3Row {
  unsigned n1;
  long long c1;
  long long c1_tilde;
  unsigned n2;
  long long c2;
  long long c2_tilde;
};

/// Ceilings of C_1, C~_1 (n = 1 mod 3) and C_2, C~_2 (n = 2 mod 3).
inline constexpr std::array<Table3Row, 18> kTable3 = {{
    {7, 111, 119, 8, 101, 126},       {10, 181, 193, 11, 147, 183},
    {13, 257, 273, 14, 196, 241},     {16, 336, 357, 17, 246, 302},
    {19, 418, 445, 20, 298, 364},     {22, 503, 535, 23, 351, 428},
    {25, 590, 628, 26, 406, 493},     {28, 679, 723, 29, 461, 558},
    {31, 770, 820, 32, 517, 625},     {34, 863, 919, 35, 574, 693},
    {37, 957, 1019, 38, 632, 761},    {40, 1053, 1121, 41, 690, 830},
    {43, 1150, 1224, 44, 749, 900},   {46, 1248, 1328, 47, 809, 970},
    {49, 1347, 1434, 50, 869, 1041},  {52, 1447, 1540, 53, 929, 1113},
    {55, 1549, 1648, 56, 990, 1185},  {58, 1651, 1756, 59, 1052, 1257},
}};

inline constexpr unsigned kTable4DMax = 20;
inline constexpr unsigned kTable4NMax = 26;

/// Exception landscape, one string per n = 1..26; character d-1 is '*' when
/// Delta_d(n) < 0.
inline constexpr std::array<std::string_view, kTable4NMax> kTable4 = {{
    "********************",  //  1
    "....................",  //  2
    "***.................",  //  3
    ".....***************",  //  4
    "*********...........",  //  5
    "....................",  //  6
    "***.......**********",  //  7
    "........************",  //  8
    "**..................",  //  9
    "...............*****",  // 10
    "**.........*********",  // 11
    "....................",  // 12
    "*..................*",  // 13
    "..............******",  // 14
    "*...................",  // 15
    "....................",  // 16
    "*................***",  // 17
    "....................",  // 18
    "*...................",  // 19
    "...................*",  // 20
    "*...................",  // 21
    "....................",  // 22
    "*...................",  // 23
    "....................",  // 24
    "*...................",  // 25
    "....................",  // 26
}};

inline bool table4_exception(unsigned n, unsigned d) {
  return kTable4.at(n - 1).at(d - 1) == '*';
}

/// Exceptions of p_d within [1, n_max] for d = 1..8 as tabulated.
std::set<std::uint64_t> table1_exceptions(unsigned d, std::uint64_t n_max);

/// Whether Delta_d(n) < 0 according to the small-n table, 1 <= n <= 9.
bool theorem_small_n_exception(unsigned n, unsigned d);

}  // namespace logconcave::golden

#endif  // LOGCONCAVE_GOLDEN_HPP_
