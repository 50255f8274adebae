// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "logconcave/row_cache.hpp"

namespace logconcave {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("logconcave-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(RowFile, RoundTrip) {
  const auto row = compute_row(ExponentSequence::power(3), 40);
  std::stringstream ss;
  write_row(ss, row);
  const auto back = read_row(ss, 3u);
  EXPECT_EQ(back.coeffs, row.coeffs);
  EXPECT_TRUE(back.seq.is_power());
  EXPECT_EQ(back.seq.d(), 3u);
}

TEST(RowFile, Rejections) {
  {
    std::istringstream in("not a row file\n1\n");
    EXPECT_THROW(read_row(in), RowFormatError);
  }
  {
    std::istringstream in("pdrow v1 kind=power d=2 nmax=2\n1\n1\n3\n");
    EXPECT_THROW(read_row(in, 3u), RowFormatError);
  }
  {
    std::istringstream in("pdrow v1 kind=power d=2 nmax=3\n1\n1\n3\n");
    EXPECT_THROW(read_row(in), RowFormatError);
  }
  {
    std::istringstream in("pdrow v1 kind=power d=2 nmax=2\n1\nx1\n3\n");
    EXPECT_THROW(read_row(in), RowFormatError);
  }
  {
    std::istringstream in("");
    EXPECT_THROW(read_row(in), RowFormatError);
  }
  std::stringstream out;
  EXPECT_THROW(write_row(out, compute_row(ExponentSequence::from_values({1, 2}), 2)),
               std::invalid_argument);
}

TEST(RowCache, MemoryOnly) {
  RowCache cache;
  const auto a = cache.power_row(2, 20);
  const auto b = cache.power_row(2, 10);
  EXPECT_EQ(a.get(), b.get());
  const auto c = cache.power_row(2, 50);
  EXPECT_EQ(c->n_max(), 50u);
  EXPECT_EQ(c->coeffs, compute_row(ExponentSequence::power(2), 50).coeffs);
  EXPECT_THROW(cache.file_for(2), std::logic_error);
}

TEST(RowCache, PersistsAndReloads) {
  TempDir dir;
  {
    RowCache cache(dir.path());
    cache.power_row(5, 30);
  }
  ASSERT_TRUE(fs::exists(dir.path() / "pdrow-d5.txt"));
  RowCache again(dir.path());
  const auto row = again.power_row(5, 25);
  EXPECT_EQ(row->n_max(), 30u);
  EXPECT_EQ(row->coeffs, compute_row(ExponentSequence::power(5), 30).coeffs);
}

TEST(RowCache, CorruptFileIsRecomputed) {
  TempDir dir;
  {
    std::ofstream f(dir.path() / "pdrow-d4.txt");
    f << "pdrow v1 kind=power d=4 nmax=3\n1\n1\n999\n";
  }
  RowCache cache(dir.path());
  const auto row = cache.power_row(4, 10);
  EXPECT_EQ(row->coeffs, compute_row(ExponentSequence::power(4), 10).coeffs);
  std::ifstream f(dir.path() / "pdrow-d4.txt");
  EXPECT_EQ(read_row(f, 4u).coeffs, row->coeffs);
}

TEST(RowCache, ConcurrentRequests) {
  TempDir dir;
  RowCache cache(dir.path());
  std::vector<RowPtr> got(16);
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < got.size(); ++i) {
      threads.emplace_back([&, i] { got[i] = cache.power_row(1 + i % 4, 30 + 10 * (i % 3)); });
    }
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    const unsigned d = 1 + i % 4;
    const auto ref = compute_row(ExponentSequence::power(d), got[i]->n_max());
    EXPECT_EQ(got[i]->coeffs, ref.coeffs) << i;
    EXPECT_GE(got[i]->n_max(), 30 + 10 * (i % 3));
  }
}

}  // namespace
}  // namespace logconcave
