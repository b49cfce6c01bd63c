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

#include "textaug/gallery_index.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "textaug/error.h"

namespace textaug {
namespace {

// Shared by Distance() and the index so both produce identical doubles.
double CosineFromParts(double dot, double norm_u, double norm_v) {
  return 1.0 - dot / (norm_u * norm_v);
}

double EuclideanDistance(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void CheckDims(size_t expected, size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " dim " + std::to_string(got) +
                    " does not match " + std::to_string(expected));
  }
}

}  // namespace

std::string_view MetricName(DistanceMetric metric) {
  switch (metric) {
    case DistanceMetric::kCosine:
      return "cosine";
    case DistanceMetric::kEuclidean:
      return "euclidean";
  }
  return "unknown";
}

DistanceMetric ParseMetric(std::string_view name) {
  if (name == "cosine") return DistanceMetric::kCosine;
  if (name == "euclidean") return DistanceMetric::kEuclidean;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown metric '" + std::string(name) +
                  "' (expected cosine or euclidean)");
}

double Distance(DistanceMetric metric, std::span<const double> u,
                std::span<const double> v) {
  CheckDims(u.size(), v.size(), "vector");
  if (metric == DistanceMetric::kEuclidean) return EuclideanDistance(u, v);
  const double nu = L2Norm(u);
  const double nv = L2Norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw Error(ErrorCode::kZeroNorm, "cosine distance of a zero vector");
  }
  return CosineFromParts(Dot(u, v), nu, nv);
}

GalleryIndex::GalleryIndex(std::vector<GalleryEntry> entries, size_t dim,
                           DistanceMetric metric)
    : entries_(std::move(entries)), dim_(dim), metric_(metric) {}

GalleryIndex GalleryIndex::Build(std::vector<GalleryEntry> entries,
                                 DistanceMetric metric) {
  if (entries.empty()) {
    throw Error(ErrorCode::kEmptyGallery, "gallery has no entries");
  }
  const size_t dim = entries.front().embedding.dim();
  std::unordered_set<std::string> seen;
  for (const GalleryEntry& entry : entries) {
    if (!seen.insert(entry.entry_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate gallery entry_id '" + entry.entry_id + "'");
    }
    if (entry.embedding.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "gallery entry '" + entry.entry_id + "' has dim " +
                      std::to_string(entry.embedding.dim()) + ", expected " +
                      std::to_string(dim));
    }
  }
  // Canonical order makes results independent of insertion order and turns
  // the entry_id tie-break into an index comparison.
  std::sort(entries.begin(), entries.end(),
            [](const GalleryEntry& a, const GalleryEntry& b) {
              return a.entry_id < b.entry_id;
            });

  GalleryIndex index(std::move(entries), dim, metric);
  index.matrix_.reserve(index.entries_.size() * dim);
  index.norms_.reserve(index.entries_.size());
  for (const GalleryEntry& entry : index.entries_) {
    const auto values = entry.embedding.vector().values();
    index.matrix_.insert(index.matrix_.end(), values.begin(), values.end());
    const double norm = L2Norm(values);
    if (metric == DistanceMetric::kCosine && norm == 0.0) {
      throw Error(ErrorCode::kZeroNorm,
                  "gallery entry '" + entry.entry_id +
                      "' has a zero embedding (cosine metric)");
    }
    index.norms_.push_back(norm);
  }
  return index;
}

RankedList GalleryIndex::Search(std::string query_id,
                                std::span<const double> query,
                                size_t top_k) const {
  CheckDims(dim_, query.size(), "query");
  if (top_k == 0) throw Error(ErrorCode::kInvalidArgument, "top_k must be >= 1");

  double query_norm = 0.0;
  if (metric_ == DistanceMetric::kCosine) {
    query_norm = L2Norm(query);
    if (query_norm == 0.0) {
      throw Error(ErrorCode::kZeroNorm,
                  "query '" + query_id + "' has a zero embedding");
    }
  }

  const size_t n = entries_.size();
  std::vector<double> distances(n);
  const std::span<const double> matrix(matrix_);
  for (size_t i = 0; i < n; ++i) {
    const auto row = matrix.subspan(i * dim_, dim_);
    distances[i] = metric_ == DistanceMetric::kCosine
                       ? CosineFromParts(Dot(row, query), norms_[i], query_norm)
                       : EuclideanDistance(row, query);
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  auto closer = [&](size_t a, size_t b) {
    if (distances[a] != distances[b]) return distances[a] < distances[b];
    return a < b;
  };
  const size_t k = std::min(top_k, n);
  if (k < n) {
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                      order.end(), closer);
    order.resize(k);
  } else {
    std::sort(order.begin(), order.end(), closer);
  }

  RankedList ranked;
  ranked.query_id = std::move(query_id);
  ranked.hits.reserve(k);
  for (size_t i : order) {
    ranked.hits.push_back(
        Hit{entries_[i].entry_id, entries_[i].person_id, distances[i]});
  }
  return ranked;
}

std::optional<size_t> RankOfMatch(const RankedList& ranked,
                                  std::string_view person_id) {
  for (size_t i = 0; i < ranked.hits.size(); ++i) {
    if (ranked.hits[i].person_id == person_id) return i + 1;
  }
  return std::nullopt;
}

}  // namespace textaug
