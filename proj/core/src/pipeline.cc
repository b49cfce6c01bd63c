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

#include "textaug/pipeline.h"

#include <utility>

#include "textaug/error.h"

namespace textaug {
namespace {

EmbeddingVector MaybeProject(EmbeddingVector v,
                             const std::optional<ProjectionMatrix>& w) {
  return w ? Project(v, *w) : v;
}

EmbeddingVector TextVector(std::span<const Caption> inputs,
                           const EmbeddingProvider& provider,
                           const PipelineConfig& cfg) {
  std::vector<EmbeddingVector> embedded;
  embedded.reserve(inputs.size());
  for (EmbeddingVector& v : provider.EmbedText(inputs)) {
    embedded.push_back(MaybeProject(std::move(v), cfg.text_projection));
  }
  return Aggregate(embedded, cfg.normalize_aggregate);
}

EmbeddingVector ImageVector(const std::string& entry_id,
                            const EmbeddingProvider& provider,
                            const PipelineConfig& cfg) {
  const std::string refs[] = {entry_id};
  std::vector<EmbeddingVector> out = provider.EmbedImage(refs);
  return MaybeProject(std::move(out.front()), cfg.image_projection);
}

bool UsesText(QueryMode mode) { return mode != QueryMode::kImage; }
bool UsesImage(QueryMode mode) { return mode != QueryMode::kText; }

}  // namespace

std::string_view QueryModeName(QueryMode mode) {
  switch (mode) {
    case QueryMode::kText:
      return "text";
    case QueryMode::kImage:
      return "image";
    case QueryMode::kMultimodal:
      return "mm";
  }
  return "unknown";
}

QueryMode ParseQueryMode(std::string_view name) {
  if (name == "text") return QueryMode::kText;
  if (name == "image") return QueryMode::kImage;
  if (name == "mm") return QueryMode::kMultimodal;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(name) +
                  "' (expected text, image or mm)");
}

std::string_view GalleryModeName(GalleryMode mode) {
  return mode == GalleryMode::kJoint ? "joint" : "image";
}

GalleryMode ParseGalleryMode(std::string_view name) {
  if (name == "joint") return GalleryMode::kJoint;
  if (name == "image") return GalleryMode::kImageOnly;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown gallery mode '" + std::string(name) +
                  "' (expected joint or image)");
}

std::string CaptionId(std::string_view entry_id, size_t j) {
  return std::string(entry_id) + "/" + std::to_string(j);
}

std::vector<Caption> RecordCaptions(const ManifestRecord& record,
                                    const PipelineConfig& cfg) {
  std::vector<Caption> out;
  for (size_t j = 0; j < record.captions.size(); ++j) {
    out.push_back(Caption{CaptionId(record.entry_id, j), record.captions[j]});
  }
  if (out.empty() && record.attributes && !record.attributes->empty()) {
    const AttributeTemplates& templates =
        cfg.templates ? *cfg.templates : AttributeTemplates::Defaults();
    Caption caption = AttributesToCaption(*record.attributes, templates,
                                          cfg.max_caption_words);
    caption.id = CaptionId(record.entry_id, 0);
    out.push_back(std::move(caption));
  }
  return out;
}

std::vector<Caption> QueryTextInputs(const Caption& caption,
                                     const PipelineConfig& cfg,
                                     const VariantTable* variants) {
  if (variants != nullptr) {
    auto it = variants->find(caption.id);
    if (it == variants->end() || it->second.empty()) {
      throw Error(ErrorCode::kMissingField,
                  "no variants for caption '" + caption.id + "'");
    }
    return it->second;
  }
  if (cfg.variants == 0) return {caption};

  AugmentationConfig augment = cfg.augment;
  augment.k = cfg.variants;
  const std::vector<Variant> generated =
      cfg.include_original ? AugmentWithOriginal(caption, augment)
                           : CutMixOut(caption, augment);
  std::vector<Caption> out;
  out.reserve(generated.size());
  for (const Variant& v : generated) out.push_back(v.caption);
  return out;
}

PipelineData BuildPipelineData(std::span<const ManifestRecord> records,
                               const EmbeddingProvider& provider,
                               const PipelineConfig& cfg,
                               const VariantTable* variants) {
  if (cfg.variants > 0 && variants == nullptr) cfg.augment.Validate();

  PipelineData data;
  bool any_text = false;
  for (const ManifestRecord& record : records) {
    const std::vector<Caption> captions =
        UsesText(cfg.mode) ? RecordCaptions(record, cfg) : std::vector<Caption>{};
    if (UsesText(cfg.mode) && captions.empty()) continue;
    any_text = any_text || !captions.empty();

    std::optional<EmbeddingVector> image;
    if (UsesImage(cfg.mode) || cfg.gallery_mode == GalleryMode::kImageOnly) {
      image = ImageVector(record.entry_id, provider, cfg);
    }

    // Gallery side: un-augmented first caption.
    std::optional<EmbeddingVector> gallery_text;
    std::optional<EmbeddingVector> gallery_image;
    if (cfg.gallery_mode == GalleryMode::kImageOnly) {
      gallery_image = image;
    } else {
      if (UsesText(cfg.mode)) {
        gallery_text = TextVector(std::span(captions).first(1), provider, cfg);
      }
      if (UsesImage(cfg.mode)) gallery_image = image;
    }
    data.gallery.push_back(GalleryEntry{
        record.entry_id, record.person_id, record.camera_id,
        Fuse(gallery_text, gallery_image, cfg.normalize_halves)});

    // Query side.
    const std::optional<EmbeddingVector> query_image =
        UsesImage(cfg.mode) ? image : std::nullopt;
    if (!UsesText(cfg.mode)) {
      data.queries.push_back(QueryRecord{
          record.entry_id, Fuse(std::nullopt, query_image, cfg.normalize_halves),
          record.person_id, record.camera_id, record.entry_id});
      continue;
    }
    for (const Caption& caption : captions) {
      const std::vector<Caption> inputs =
          QueryTextInputs(caption, cfg, variants);
      data.queries.push_back(QueryRecord{
          caption.id,
          Fuse(TextVector(inputs, provider, cfg), query_image,
               cfg.normalize_halves),
          record.person_id, record.camera_id, record.entry_id});
    }
  }
  if (UsesText(cfg.mode) && !any_text) {
    throw Error(ErrorCode::kInvalidArgument, "no captions for text mode");
  }
  return data;
}

}  // namespace textaug
