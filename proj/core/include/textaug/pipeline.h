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

// Assembles query and gallery joint embeddings from manifest records.
//
// Every caption of a text-bearing record becomes one query. Its text half is
// the aggregate of the embeddings of its augmented variants (plus the
// original caption as variant 0 when include_original is set); with
// variants == 0 it is the single caption embedding. Gallery entries use the
// record's first caption without augmentation. Image references passed to
// the provider are entry ids.

#ifndef TEXTAUG_PIPELINE_H_
#define TEXTAUG_PIPELINE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/augment.h"
#include "textaug/dataset.h"
#include "textaug/embedding.h"
#include "textaug/evaluate.h"
#include "textaug/gallery_index.h"
#include "textaug/provider.h"

namespace textaug {

enum class QueryMode { kText, kImage, kMultimodal };
enum class GalleryMode { kJoint, kImageOnly };

std::string_view QueryModeName(QueryMode mode);
QueryMode ParseQueryMode(std::string_view name);
std::string_view GalleryModeName(GalleryMode mode);
GalleryMode ParseGalleryMode(std::string_view name);

struct PipelineConfig {
  QueryMode mode = QueryMode::kText;
  // kImageOnly keeps only the image half on the gallery side, which pairs
  // with text queries for cross-modal retrieval when the dims agree.
  GalleryMode gallery_mode = GalleryMode::kJoint;
  // Number of augmented variants per query caption; 0 disables augmentation.
  size_t variants = 8;
  AugmentationConfig augment;
  bool include_original = true;
  bool normalize_aggregate = true;
  bool normalize_halves = true;
  std::optional<ProjectionMatrix> text_projection;
  std::optional<ProjectionMatrix> image_projection;
  size_t max_caption_words = kDefaultMaxCaptionWords;
  const AttributeTemplates* templates = nullptr;  // defaults when null
};

// "<entry_id>/<j>" for the j-th caption of a record.
std::string CaptionId(std::string_view entry_id, size_t j);

// The record's captions with their ids. Attribute-only records yield one
// generated caption. Image-only records yield nothing.
std::vector<Caption> RecordCaptions(const ManifestRecord& record,
                                    const PipelineConfig& cfg);

// Externally embedded variants grouped by parent caption id, in the order
// they should be aggregated.
using VariantTable = std::map<std::string, std::vector<Caption>, std::less<>>;

// The captions whose embeddings are aggregated into one query text vector.
std::vector<Caption> QueryTextInputs(const Caption& caption,
                                     const PipelineConfig& cfg,
                                     const VariantTable* variants);

struct PipelineData {
  std::vector<GalleryEntry> gallery;
  std::vector<QueryRecord> queries;
};

// Throws kInvalidArgument when a text mode finds no captions at all
// ("no captions for text mode").
PipelineData BuildPipelineData(std::span<const ManifestRecord> records,
                               const EmbeddingProvider& provider,
                               const PipelineConfig& cfg,
                               const VariantTable* variants = nullptr);

}  // namespace textaug

#endif  // TEXTAUG_PIPELINE_H_
