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

#ifndef TEXTAUG_EVALUATE_H_
#define TEXTAUG_EVALUATE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "textaug/embedding.h"
#include "textaug/gallery_index.h"

namespace textaug {

// CMC(k): fraction of ranks <= k. Throws kEmptyRanks on empty input and
// kInvalidArgument for k == 0 or a zero rank.
double Cmc(std::span<const size_t> ranks, size_t k);

struct ProtocolConfig {
  std::vector<size_t> ks = {1, 5, 10, 20};
  bool exclude_same_camera = false;
  // Drop the gallery entry the query was derived from.
  bool exclude_self = true;

  // ks nonempty, positive and strictly ascending.
  void Validate() const;
};

struct QueryRecord {
  std::string query_id;
  JointEmbedding embedding;
  std::string person_id;
  std::optional<std::string> camera_id;
  std::optional<std::string> source_entry_id;
};

enum class QueryStatus {
  kRanked,
  kNoMatch,               // no gallery entry shares the person id
  kEmptyAfterExclusion,   // exclusions removed every gallery entry
  kMatchesExcluded,       // correct matches exist but were all excluded
};

std::string_view QueryStatusName(QueryStatus status);

struct QueryOutcome {
  std::string query_id;
  std::string person_id;
  std::optional<size_t> rank;
  QueryStatus status = QueryStatus::kRanked;
  size_t candidates = 0;  // gallery entries left after exclusion
};

struct EvalReport {
  std::vector<QueryOutcome> per_query;
  // (k, CMC(k)) in ascending k; empty when no query is evaluable.
  std::vector<std::pair<size_t, double>> cmc;
  size_t n_queries = 0;  // evaluable queries, the N of CMC
  size_t n_total = 0;
  ProtocolConfig config;
  DistanceMetric metric = DistanceMetric::kCosine;

  std::optional<double> CmcAt(size_t k) const;
};

// The full ranked gallery for one query with the configured exclusions
// applied.
RankedList RankQuery(const GalleryIndex& index, const QueryRecord& query,
                     const ProtocolConfig& cfg);

// Queries are scored independently (over `threads` workers) and assembled in
// input order, so the report does not depend on scheduling.
EvalReport EvaluateProtocol(std::span<const QueryRecord> queries,
                            const GalleryIndex& index,
                            const ProtocolConfig& cfg, size_t threads = 1);

nlohmann::json ReportToJson(const EvalReport& report);
// "k,cmc" header then one row per k.
std::string ReportToCsv(const EvalReport& report);

// Shortest decimal that round-trips the double.
std::string FormatDouble(double value);

}  // namespace textaug

#endif  // TEXTAUG_EVALUATE_H_
