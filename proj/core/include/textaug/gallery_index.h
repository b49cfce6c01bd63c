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

#ifndef TEXTAUG_GALLERY_INDEX_H_
#define TEXTAUG_GALLERY_INDEX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/embedding.h"

namespace textaug {

enum class DistanceMetric { kCosine, kEuclidean };

std::string_view MetricName(DistanceMetric metric);
DistanceMetric ParseMetric(std::string_view name);

// cosine: 1 - u.v / (|u| |v|), kZeroNorm if either side is zero.
// euclidean: |u - v|.
double Distance(DistanceMetric metric, std::span<const double> u,
                std::span<const double> v);

struct GalleryEntry {
  std::string entry_id;
  std::string person_id;
  std::optional<std::string> camera_id;
  JointEmbedding embedding;
};

struct Hit {
  std::string entry_id;
  std::string person_id;
  double distance = 0.0;

  friend bool operator==(const Hit&, const Hit&) = default;
};

// Hits ascend by distance; equal distances ascend by entry_id.
struct RankedList {
  std::string query_id;
  std::vector<Hit> hits;
};

// Immutable exhaustive-search index. Safe for concurrent Search calls.
class GalleryIndex {
 public:
  // Throws kEmptyGallery, kDuplicateId, kDimensionMismatch, and kZeroNorm for
  // a zero embedding under the cosine metric.
  static GalleryIndex Build(std::vector<GalleryEntry> entries,
                            DistanceMetric metric);

  size_t size() const { return entries_.size(); }
  size_t dim() const { return dim_; }
  DistanceMetric metric() const { return metric_; }

  // Entries in canonical (ascending entry_id) order.
  const std::vector<GalleryEntry>& entries() const { return entries_; }

  // The min(top_k, size()) nearest entries. Throws kDimensionMismatch and
  // kInvalidArgument for top_k == 0.
  RankedList Search(std::string query_id, std::span<const double> query,
                    size_t top_k) const;
  RankedList Search(std::string query_id, const JointEmbedding& query,
                    size_t top_k) const {
    return Search(std::move(query_id), query.vector().values(), top_k);
  }

 private:
  GalleryIndex(std::vector<GalleryEntry> entries, size_t dim,
               DistanceMetric metric);

  std::vector<GalleryEntry> entries_;
  size_t dim_;
  DistanceMetric metric_;
  // Row-major copy of the embeddings plus their norms for the cosine kernel.
  std::vector<double> matrix_;
  std::vector<double> norms_;
};

// 1-based position of the first hit with `person_id`, nullopt if none.
std::optional<size_t> RankOfMatch(const RankedList& ranked,
                                  std::string_view person_id);

}  // namespace textaug

#endif  // TEXTAUG_GALLERY_INDEX_H_
