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
#include <charconv>
#include <exception>
#include <thread>

#include "textaug/error.h"

namespace textaug {
namespace {

bool Excluded(const GalleryEntry& entry, const QueryRecord& query,
              const ProtocolConfig& cfg) {
  if (cfg.exclude_self && query.source_entry_id &&
      entry.entry_id == *query.source_entry_id) {
    return true;
  }
  return cfg.exclude_same_camera && query.camera_id && entry.camera_id &&
         *entry.camera_id == *query.camera_id;
}

QueryOutcome ScoreQuery(const GalleryIndex& index, const QueryRecord& query,
                        const ProtocolConfig& cfg) {
  QueryOutcome outcome;
  outcome.query_id = query.query_id;
  outcome.person_id = query.person_id;

  const RankedList ranked = RankQuery(index, query, cfg);
  outcome.candidates = ranked.hits.size();
  outcome.rank = RankOfMatch(ranked, query.person_id);
  if (outcome.rank) {
    outcome.status = QueryStatus::kRanked;
  } else if (ranked.hits.empty()) {
    outcome.status = QueryStatus::kEmptyAfterExclusion;
  } else {
    const bool exists = std::any_of(
        index.entries().begin(), index.entries().end(),
        [&](const GalleryEntry& e) { return e.person_id == query.person_id; });
    outcome.status =
        exists ? QueryStatus::kMatchesExcluded : QueryStatus::kNoMatch;
  }
  return outcome;
}

}  // namespace

double Cmc(std::span<const size_t> ranks, size_t k) {
  if (ranks.empty()) throw Error(ErrorCode::kEmptyRanks, "CMC of no ranks");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "CMC k must be >= 1");
  size_t hits = 0;
  for (size_t rank : ranks) {
    if (rank == 0) {
      throw Error(ErrorCode::kInvalidArgument, "ranks are 1-based");
    }
    if (rank <= k) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

void ProtocolConfig::Validate() const {
  if (ks.empty()) throw Error(ErrorCode::kInvalidArgument, "ks must be nonempty");
  for (size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == 0) throw Error(ErrorCode::kInvalidArgument, "ks must be >= 1");
    if (i > 0 && ks[i] <= ks[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "ks must be strictly ascending");
    }
  }
}

std::string_view QueryStatusName(QueryStatus status) {
  switch (status) {
    case QueryStatus::kRanked:
      return "ranked";
    case QueryStatus::kNoMatch:
      return "no-match";
    case QueryStatus::kEmptyAfterExclusion:
      return "empty-after-exclusion";
    case QueryStatus::kMatchesExcluded:
      return "matches-excluded";
  }
  return "unknown";
}

std::optional<double> EvalReport::CmcAt(size_t k) const {
  for (const auto& [kk, value] : cmc) {
    if (kk == k) return value;
  }
  return std::nullopt;
}

RankedList RankQuery(const GalleryIndex& index, const QueryRecord& query,
                     const ProtocolConfig& cfg) {
  RankedList ranked = index.Search(query.query_id, query.embedding, index.size());
  // Entries are looked up by id; the index keeps them sorted by entry_id.
  const auto& entries = index.entries();
  std::erase_if(ranked.hits, [&](const Hit& hit) {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), hit.entry_id,
        [](const GalleryEntry& e, const std::string& id) {
          return e.entry_id < id;
        });
    return Excluded(*it, query, cfg);
  });
  return ranked;
}

EvalReport EvaluateProtocol(std::span<const QueryRecord> queries,
                            const GalleryIndex& index,
                            const ProtocolConfig& cfg, size_t threads) {
  cfg.Validate();
  for (const QueryRecord& q : queries) {
    if (q.embedding.dim() != index.dim()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "query '" + q.query_id + "' has dim " +
                      std::to_string(q.embedding.dim()) + ", gallery has " +
                      std::to_string(index.dim()));
    }
  }

  EvalReport report;
  report.config = cfg;
  report.metric = index.metric();
  report.n_total = queries.size();
  report.per_query.resize(queries.size());

  threads = std::clamp<size_t>(threads, 1, std::max<size_t>(queries.size(), 1));
  if (threads == 1) {
    for (size_t i = 0; i < queries.size(); ++i) {
      report.per_query[i] = ScoreQuery(index, queries[i], cfg);
    }
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (size_t i = t; i < queries.size(); i += threads) {
            report.per_query[i] = ScoreQuery(index, queries[i], cfg);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<size_t> ranks;
  for (const QueryOutcome& outcome : report.per_query) {
    if (outcome.rank) ranks.push_back(*outcome.rank);
  }
  report.n_queries = ranks.size();
  if (!ranks.empty()) {
    for (size_t k : cfg.ks) report.cmc.emplace_back(k, Cmc(ranks, k));
  }
  return report;
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

nlohmann::json ReportToJson(const EvalReport& report) {
  nlohmann::json cmc = nlohmann::json::array();
  for (const auto& [k, value] : report.cmc) {
    cmc.push_back({{"k", k}, {"cmc", value}});
  }
  nlohmann::json per_query = nlohmann::json::array();
  nlohmann::json unevaluable = nlohmann::json::array();
  for (const QueryOutcome& q : report.per_query) {
    nlohmann::json row = {{"query_id", q.query_id},
                          {"person_id", q.person_id},
                          {"status", QueryStatusName(q.status)},
                          {"candidates", q.candidates}};
    row["rank"] = q.rank ? nlohmann::json(*q.rank) : nlohmann::json(nullptr);
    if (!q.rank) unevaluable.push_back(q.query_id);
    per_query.push_back(std::move(row));
  }
  return {
      {"n_queries", report.n_queries},
      {"n_total", report.n_total},
      {"cmc", std::move(cmc)},
      {"unevaluable_queries", std::move(unevaluable)},
      {"per_query", std::move(per_query)},
      {"config",
       {{"ks", report.config.ks},
        {"exclude_same_camera", report.config.exclude_same_camera},
        {"exclude_self", report.config.exclude_self},
        {"metric", MetricName(report.metric)}}},
  };
}

std::string ReportToCsv(const EvalReport& report) {
  std::string out = "k,cmc\n";
  for (const auto& [k, value] : report.cmc) {
    out += std::to_string(k) + "," + FormatDouble(value) + "\n";
  }
  return out;
}

}  // namespace textaug
