// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LOGCONCAVE_ROW_CACHE_HPP_
#define LOGCONCAVE_ROW_CACHE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "logconcave/series.hpp"

namespace logconcave {

class RowFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//   pdrow v1 kind=power d=<d> nmax=<N>
//   <p(0)>
//   ...
//   <p(N)>
void write_row(std::ostream& os, const CoeffRow& row);
/// Throws RowFormatError on a malformed header, a d mismatch (when
/// `expected_d` is given) or a line count that disagrees with nmax.
CoeffRow read_row(std::istream& is, std::optional<unsigned> expected_d = std::nullopt);

/// Shared store of power-family rows keyed by d.
///
/// A stored row of length M answers every request for n_max <= M and seeds
/// the recurrence when a longer row is requested. Different d may be filled
/// concurrently; requests for the same d are serialized. When a directory is
/// given, rows are loaded from and written back to it.
class RowCache {
 public:
  explicit RowCache(std::optional<std::filesystem::path> dir = std::nullopt);

  RowCache(const RowCache&) = delete;
  RowCache& operator=(const RowCache&) = delete;

  /// Row for power(d) covering at least 0..n_max. May be longer.
  RowPtr power_row(unsigned d, std::size_t n_max);

  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }
  std::filesystem::path file_for(unsigned d) const;

 private:
  struct Slot {
    std::mutex mutex;
    RowPtr row;
  };

  std::shared_ptr<Slot> slot(unsigned d);
  RowPtr load(unsigned d) const;
  void store(const CoeffRow& row) const;

  std::optional<std::filesystem::path> dir_;
  std::mutex slots_mutex_;
  std::map<unsigned, std::shared_ptr<Slot>> slots_;
};

}  // namespace logconcave

#endif  // LOGCONCAVE_ROW_CACHE_HPP_
