//
// Copyright 2026 The TextAug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "textaug/evaluate.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/instances.h"
#include "textaug/error.h"
#include "textaug/random.h"

namespace textaug {
namespace {

JointEmbedding Joint(std::vector<double> v) {
  const size_t dim = v.size();
  return JointEmbedding(EmbeddingVector(std::move(v)), dim, 0);
}

GalleryEntry Entry(std::string id, std::string person, std::vector<double> v,
                   std::optional<std::string> camera = std::nullopt) {
  return GalleryEntry{std::move(id), std::move(person), std::move(camera),
                      Joint(std::move(v))};
}

QueryRecord Query(std::string id, std::string person, std::vector<double> v,
                  std::optional<std::string> camera = std::nullopt,
                  std::optional<std::string> source = std::nullopt) {
  return QueryRecord{std::move(id), Joint(std::move(v)), std::move(person),
                     std::move(camera), std::move(source)};
}

TEST(CmcTest, HandValues) {
  const std::vector<size_t> ranks = {1, 3};
  EXPECT_EQ(Cmc(ranks, 1), 0.5);
  EXPECT_EQ(Cmc(ranks, 2), 0.5);
  EXPECT_EQ(Cmc(ranks, 3), 1.0);
}

TEST(CmcTest, Errors) {
  try {
    Cmc({}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyRanks);
  }
  const std::vector<size_t> ranks = {1};
  EXPECT_THROW(Cmc(ranks, 0), Error);
  const std::vector<size_t> zero = {0};
  EXPECT_THROW(Cmc(zero, 1), Error);
}

TEST(CmcPropertyTest, CountingOracleAndMonotonicity) {
  Rng rng(51);
  std::vector<size_t> ranks(100);
  for (size_t& r : ranks) r = rng.UniformInt(1, 50);
  double previous = 0.0;
  for (size_t k = 1; k <= 55; ++k) {
    size_t count = 0;
    for (size_t r : ranks) count += r <= k ? 1 : 0;
    const double value = Cmc(ranks, k);
    EXPECT_EQ(value, count / 100.0);
    EXPECT_GE(value, previous);
    previous = value;
  }
  EXPECT_EQ(previous, 1.0);
}

TEST(ProtocolConfigTest, Validate) {
  EXPECT_NO_THROW(ProtocolConfig{}.Validate());
  ProtocolConfig cfg;
  cfg.ks = {};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.ks = {5, 1};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.ks = {1, 1};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.ks = {0, 1};
  EXPECT_THROW(cfg.Validate(), Error);
}

TEST(EvaluateTest, PerfectRetrieval) {
  const GalleryIndex index = GalleryIndex::Build(
      {Entry("a", "p1", {1, 0}), Entry("b", "p2", {0, 1})}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> queries = {Query("q1", "p1", {0.9, 0.1}),
                                            Query("q2", "p2", {0.2, 0.8})};
  ProtocolConfig cfg;
  cfg.ks = {1, 2};
  const EvalReport report = EvaluateProtocol(queries, index, cfg);
  EXPECT_EQ(report.n_queries, 2u);
  EXPECT_EQ(report.CmcAt(1), 1.0);
  EXPECT_EQ(report.CmcAt(2), 1.0);
  EXPECT_EQ(report.CmcAt(3), std::nullopt);
}

TEST(EvaluateTest, DisjointPersonsHaveNoEvaluableQueries) {
  const GalleryIndex index =
      GalleryIndex::Build({Entry("a", "p1", {1, 0})}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> queries = {Query("q", "p9", {1, 0})};
  const EvalReport report = EvaluateProtocol(queries, index, ProtocolConfig{});
  EXPECT_EQ(report.n_queries, 0u);
  EXPECT_EQ(report.n_total, 1u);
  EXPECT_TRUE(report.cmc.empty());
  EXPECT_EQ(report.per_query[0].status, QueryStatus::kNoMatch);
  EXPECT_EQ(report.per_query[0].rank, std::nullopt);
}

TEST(EvaluateTest, ExclusionStatuses) {
  const GalleryIndex index = GalleryIndex::Build(
      {Entry("a", "p1", {1, 0}, "c1"), Entry("b", "p2", {0, 1}, "c2")},
      DistanceMetric::kCosine);
  ProtocolConfig cfg;
  cfg.exclude_same_camera = true;
  const std::vector<QueryRecord> queries = {
      // Its only match shares its camera.
      Query("q1", "p1", {1, 0}, "c1"),
      // Its only match is its own source entry.
      Query("q2", "p2", {0, 1}, "c3", "b"),
      Query("q3", "p2", {1, 1}, "c1"),
  };
  const EvalReport report = EvaluateProtocol(queries, index, cfg);
  EXPECT_EQ(report.per_query[0].status, QueryStatus::kMatchesExcluded);
  EXPECT_EQ(report.per_query[1].status, QueryStatus::kMatchesExcluded);
  EXPECT_EQ(report.per_query[2].status, QueryStatus::kRanked);
  EXPECT_EQ(report.per_query[2].rank, 1u);
  EXPECT_EQ(report.n_queries, 1u);

  const GalleryIndex single =
      GalleryIndex::Build({Entry("a", "p1", {1, 0}, "c1")}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> lonely = {Query("q", "p1", {1, 0}, "c1")};
  EXPECT_EQ(EvaluateProtocol(lonely, single, cfg).per_query[0].status,
            QueryStatus::kEmptyAfterExclusion);
}

TEST(EvaluateTest, ExcludeSelfCanBeDisabled) {
  const GalleryIndex index = GalleryIndex::Build(
      {Entry("a", "p1", {1, 0}), Entry("b", "p1", {0, 1})}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> queries = {
      Query("q", "p1", {1, 0}, std::nullopt, "a")};
  ProtocolConfig cfg;
  EXPECT_EQ(RankQuery(index, queries[0], cfg).hits.size(), 1u);
  cfg.exclude_self = false;
  EXPECT_EQ(RankQuery(index, queries[0], cfg).hits.size(), 2u);
}

TEST(EvaluateTest, DimensionMismatchNamesBothDims) {
  const GalleryIndex index =
      GalleryIndex::Build({Entry("a", "p1", {1, 0})}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> queries = {Query("q", "p1", {1, 0, 0})};
  try {
    EvaluateProtocol(queries, index, ProtocolConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
    const std::string what = e.what();
    EXPECT_NE(what.find("3"), std::string::npos);
    EXPECT_NE(what.find("2"), std::string::npos);
  }
}

std::vector<double> CmcValues(const EvalReport& report) {
  std::vector<double> out;
  for (const auto& [k, v] : report.cmc) out.push_back(v);
  return out;
}

TEST(EvaluateOracleTest, MatchesBruteForce) {
  Rng rng(52);
  ProtocolConfig cfg;
  cfg.ks = {1, 2, 5, 10, 50, 200};
  for (int trial = 0; trial < 100; ++trial) {
    const testutil::ProtocolInstance inst =
        testutil::RandomProtocolInstance(rng, 50, 200);
    for (const bool cosine : {true, false}) {
      const GalleryIndex index = GalleryIndex::Build(
          inst.gallery, cosine ? DistanceMetric::kCosine : DistanceMetric::kEuclidean);
      const EvalReport report = EvaluateProtocol(inst.queries, index, cfg);
      ASSERT_EQ(CmcValues(report),
                testutil::OracleCmc(inst.oracle_gallery, inst.oracle_queries,
                                    cfg.ks, cosine));
    }
  }
}

TEST(EvaluatePropertyTest, MonotoneCompleteAndThreadIndependent) {
  Rng rng(53);
  ProtocolConfig cfg;
  cfg.ks = {1, 3, 10, 100, 1000};
  for (int trial = 0; trial < 50; ++trial) {
    const testutil::ProtocolInstance inst =
        testutil::RandomProtocolInstance(rng, 40, 150);
    const GalleryIndex index = GalleryIndex::Build(inst.gallery, DistanceMetric::kCosine);
    const EvalReport report = EvaluateProtocol(inst.queries, index, cfg);
    const std::vector<double> values = CmcValues(report);
    for (size_t i = 1; i < values.size(); ++i) ASSERT_LE(values[i - 1], values[i]);
    // Every evaluable query has a match inside a ranking of <= 1000 entries.
    if (!values.empty()) ASSERT_EQ(values.back(), 1.0);
    const EvalReport threaded = EvaluateProtocol(inst.queries, index, cfg, 4);
    ASSERT_EQ(ReportToJson(threaded).dump(), ReportToJson(report).dump());
  }
}

TEST(EvaluatePropertyTest, SameCameraExclusionIsSound) {
  Rng rng(54);
  ProtocolConfig cfg;
  cfg.exclude_same_camera = true;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GalleryEntry> gallery;
    for (size_t g = 0; g < 60; ++g) {
      gallery.push_back(Entry("g" + std::to_string(g), "p" + std::to_string(g % 5),
                              {rng.UniformDouble() + 0.01, rng.UniformDouble()},
                              "c" + std::to_string(rng.UniformInt(0, 3))));
    }
    const GalleryIndex index = GalleryIndex::Build(gallery, DistanceMetric::kCosine);
    for (int q = 0; q < 10; ++q) {
      const std::string camera = "c" + std::to_string(rng.UniformInt(0, 3));
      const QueryRecord query =
          Query("q", "p1", {rng.UniformDouble() + 0.01, rng.UniformDouble()}, camera);
      for (const Hit& hit : RankQuery(index, query, cfg).hits) {
        const auto& entries = index.entries();
        const auto it = std::find_if(entries.begin(), entries.end(),
                                     [&](const GalleryEntry& e) {
                                       return e.entry_id == hit.entry_id;
                                     });
        ASSERT_NE(it->camera_id, camera);
      }
    }
  }
}

TEST(ReportTest, JsonAndCsv) {
  const GalleryIndex index = GalleryIndex::Build(
      {Entry("a", "p1", {1, 0}), Entry("b", "p2", {0, 1})}, DistanceMetric::kCosine);
  const std::vector<QueryRecord> queries = {Query("q1", "p2", {1, 0.1}),
                                            Query("q2", "p7", {1, 0})};
  ProtocolConfig cfg;
  cfg.ks = {1, 5, 10};
  const EvalReport report = EvaluateProtocol(queries, index, cfg);
  EXPECT_EQ(ReportToCsv(report), "k,cmc\n1,0\n5,1\n10,1\n");
  const nlohmann::json j = ReportToJson(report);
  EXPECT_EQ(j["n_queries"], 1);
  EXPECT_EQ(j["n_total"], 2);
  EXPECT_EQ(j["per_query"][0]["rank"], 2);
  EXPECT_EQ(j["unevaluable_queries"].size(), 1u);
  EXPECT_EQ(j["config"]["metric"], "cosine");
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0 / 3.0), "0.3333333333333333");
}

}  // namespace
}  // namespace textaug
