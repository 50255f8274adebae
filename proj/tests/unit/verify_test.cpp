// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>

#include <gtest/gtest.h>
#include <json.hpp>

#include "logconcave/golden.hpp"
#include "logconcave/parallel.hpp"
#include "logconcave/row_cache.hpp"
#include "logconcave/verify.hpp"

namespace logconcave {
namespace {

TEST(Landscape, SmallGridMatchesTable) {
  const auto grid = landscape(8, 12, {.jobs = 2});
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned d = 1; d <= 8; ++d) {
      EXPECT_EQ(grid.is_exception(n, d), golden::table4_exception(n, d)) << n << ' ' << d;
    }
  }
  EXPECT_EQ(grid.exceptions_for_d(4), (std::set<std::uint64_t>{1, 5}));
  EXPECT_THROW(grid.at(13, 1), std::out_of_range);
  EXPECT_THROW(grid.at(1, 9), std::out_of_range);
}

TEST(Landscape, Renderings) {
  const auto grid = landscape(2, 3);
  EXPECT_EQ(grid.to_csv(), "n,d1,d2\n1,-1,-1\n2,1,1\n3,-1,-1\n");
  EXPECT_EQ(grid.to_csv('\t').substr(0, 8), "n\td1\td2\n");
  const auto md = grid.to_markdown();
  EXPECT_NE(md.find("| 1 | • | • |"), std::string::npos) << md;
  EXPECT_NE(md.find("| 2 |   |   |"), std::string::npos) << md;
}

TEST(Landscape, SharedCacheGivesSameGrid) {
  RowCache cache;
  const auto a = landscape(6, 20, {.cache = &cache});
  const auto b = landscape(6, 20);
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned d = 1; d <= 6; ++d) EXPECT_EQ(a.at(n, d), b.at(n, d));
  }
}

TEST(SpotCheck, ConsistentGridHasNoDisagreements) {
  const auto grid = landscape(5, 30);
  VerifyOptions opts;
  opts.spot_check_fraction = 0.5;
  EXPECT_TRUE(spot_check(grid, opts).empty());
}

TEST(SpotCheck, TamperedCellIsReported) {
  auto grid = landscape(3, 10);
  grid.set(2, 2, DeltaClass::StrictlyLogConvex);
  VerifyOptions opts;
  opts.spot_check_fraction = 1.0;
  const auto bad = spot_check(grid, opts);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].n, 2u);
  EXPECT_EQ(bad[0].d, 2u);
}

TEST(Witness, ConfirmAndReject) {
  const auto w = confirm_witness(8, 9, DeltaClass::StrictlyLogConvex, "edge");
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->delta.front(), '-');
  EXPECT_EQ(w->note, "edge");
  EXPECT_FALSE(confirm_witness(8, 8, DeltaClass::StrictlyLogConvex).has_value());
}

TEST(Suites, QuickSuitesPass) {
  for (const auto& r : {table2_suite(), table3_suite(), table4_suite()}) {
    EXPECT_EQ(r.status, Status::Pass) << to_markdown(r);
    for (const auto& c : r.details) EXPECT_TRUE(c.holds) << r.suite << ": " << c.claim;
  }
}

TEST(Suites, ScaledDownSuitesPass) {
  EXPECT_EQ(table1_suite(200).status, Status::Pass);
  EXPECT_EQ(theorem_eins_suite(40).status, Status::Pass);
  EXPECT_THROW(theorem_eins_suite(10), std::invalid_argument);
}

TEST(Suites, ConjectureScanInRange) {
  const auto r = conjecture_scan(40, 25);
  EXPECT_EQ(r.status, Status::ConfirmedInRange) << to_markdown(r);
  EXPECT_TRUE(is_success(r.status));
  EXPECT_THROW(conjecture_scan(40, 10), std::invalid_argument);
}

TEST(Report, SettleAndWitnesses) {
  VerificationReport r;
  r.suite = "s";
  ClaimRecord good{"a", true, "proved", "", {}};
  ClaimRecord bad{"b", false, "proved", "", {{5, 2, "-3", "x"}}};
  r.details = {good};
  r.settle();
  EXPECT_EQ(r.status, Status::Pass);
  r.details.push_back(bad);
  r.settle();
  EXPECT_EQ(r.status, Status::Fail);
  ASSERT_EQ(r.all_witnesses().size(), 1u);
  EXPECT_EQ(r.all_witnesses()[0].n, 5u);

  VerificationReport conj;
  conj.details = {ClaimRecord{"c", false, "conjecture", "", {{7, 40, "-1", ""}}}};
  conj.settle();
  EXPECT_EQ(conj.status, Status::Counterexample);
  EXPECT_EQ(to_string(Status::ConfirmedInRange), "Confirmed-in-range");
}

TEST(Report, JsonShape) {
  const auto r = table2_suite();
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["suite"], "table2");
  EXPECT_EQ(j["status"], "Pass");
  EXPECT_TRUE(j["witnesses"].is_array());
  EXPECT_TRUE(j["claims"].is_array());
  EXPECT_TRUE(j.contains("scope"));
  const auto many = nlohmann::json::parse(to_json(std::vector<VerificationReport>{r, r}));
  EXPECT_EQ(many.size(), 2u);
}

TEST(Parallel, CoversEveryIndexAndPropagatesErrors) {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  EXPECT_GE(resolve_jobs(0), 1u);
  EXPECT_EQ(resolve_jobs(3), 3u);
}

TEST(FirstD, Search) {
  EXPECT_EQ(first_d(1, 10, [](unsigned d) { return d * d > 20; }), 5u);
  EXPECT_EQ(first_d(1, 3, [](unsigned) { return false; }), std::nullopt);
}

}  // namespace
}  // namespace logconcave
