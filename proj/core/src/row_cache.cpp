// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include "logconcave/row_cache.hpp"

#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <regex>
#include <string>
#include <system_error>

namespace logconcave {

void write_row(std::ostream& os, const CoeffRow& row) {
  if (!row.seq.is_power()) {
    throw std::invalid_argument("write_row: only power-family rows are persisted");
  }
  os << "pdrow v1 kind=power d=" << row.seq.d() << " nmax=" << row.n_max() << '\n';
  for (const auto& c : row.coeffs) os << c.get_str() << '\n';
}

CoeffRow read_row(std::istream& is, std::optional<unsigned> expected_d) {
  static const std::regex header_re(R"(pdrow v1 kind=power d=([1-9][0-9]*) nmax=([0-9]+))");
  std::string line;
  if (!std::getline(is, line)) throw RowFormatError("row file: missing header");
  std::smatch m;
  if (!std::regex_match(line, m, header_re)) {
    throw RowFormatError("row file: bad header '" + line + "'");
  }
  const unsigned long d = std::stoul(m[1].str());
  const unsigned long long nmax = std::stoull(m[2].str());
  if (expected_d && d != *expected_d) {
    throw RowFormatError("row file: header says d=" + std::to_string(d) +
                         ", expected d=" + std::to_string(*expected_d));
  }
  CoeffRow row{ExponentSequence::power(static_cast<unsigned>(d)), {}};
  row.coeffs.reserve(nmax + 1);
  while (std::getline(is, line)) {
    if (line.empty()) throw RowFormatError("row file: empty coefficient line");
    BigInt v;
    if (v.set_str(line, 10) != 0 || v < 0) {
      throw RowFormatError("row file: bad coefficient '" + line.substr(0, 40) + "'");
    }
    row.coeffs.push_back(std::move(v));
  }
  if (row.coeffs.size() != nmax + 1) {
    throw RowFormatError("row file: header nmax=" + std::to_string(nmax) + " but " +
                         std::to_string(row.coeffs.size()) + " coefficient lines");
  }
  return row;
}

RowCache::RowCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::filesystem::path RowCache::file_for(unsigned d) const {
  if (!dir_) throw std::logic_error("RowCache has no directory");
  return *dir_ / ("pdrow-d" + std::to_string(d) + ".txt");
}

std::shared_ptr<RowCache::Slot> RowCache::slot(unsigned d) {
  std::lock_guard lock(slots_mutex_);
  auto& s = slots_[d];
  if (!s) s = std::make_shared<Slot>();
  return s;
}

RowPtr RowCache::load(unsigned d) const {
  if (!dir_) return nullptr;
  std::ifstream in(file_for(d));
  if (!in) return nullptr;
  return std::make_shared<const CoeffRow>(read_row(in, d));
}

void RowCache::store(const CoeffRow& row) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto target = file_for(row.seq.d());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    write_row(out, row);
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

RowPtr RowCache::power_row(unsigned d, std::size_t n_max) {
  auto s = slot(d);
  std::lock_guard lock(s->mutex);
  if (!s->row) {
    try {
      s->row = load(d);
    } catch (const RowFormatError& e) {
      std::clog << "logconcave: ignoring cache file " << file_for(d) << ": " << e.what()
                << '\n';
    }
  }
  if (s->row && s->row->n_max() >= n_max) return s->row;

  auto fresh = s->row ? std::make_shared<const CoeffRow>(extend_row(*s->row, n_max))
                      : std::make_shared<const CoeffRow>(
                            compute_row(ExponentSequence::power(d), n_max));
  store(*fresh);
  s->row = fresh;
  return fresh;
}

}  // namespace logconcave
