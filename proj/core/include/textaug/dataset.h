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

// Dataset manifests and attribute-based caption generation.
//
// A manifest is JSONL, one record per line:
//
//   {"entry_id": "0001_c3_0", "person_id": "0001", "camera_id": "c3",
//    "image_path": "imgs/0001_c3_0.jpg",
//    "captions": ["a man in a black coat, ..."],
//    "attributes": ["personalMale", "upperBodyBlack"]}
//
// entry_id, person_id and image_path are required; ids may be JSON strings
// or integers. Blank lines are skipped.

#ifndef TEXTAUG_DATASET_H_
#define TEXTAUG_DATASET_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/segmenter.h"

namespace textaug {

inline constexpr std::string_view kManifestSchemaVersion = "manifest-v1";

struct ManifestRecord {
  std::string entry_id;
  std::string person_id;
  std::optional<std::string> camera_id;
  std::string image_path;
  std::vector<std::string> captions;
  std::optional<std::vector<std::string>> attributes;

  bool has_text() const {
    return !captions.empty() || (attributes && !attributes->empty());
  }

  friend bool operator==(const ManifestRecord&,
                         const ManifestRecord&) = default;
};

struct ManifestStats {
  size_t images = 0;      // records with an image path
  size_t texts = 0;       // captions, counting attribute-only records once
  size_t cameras = 0;     // distinct camera ids
  size_t identities = 0;  // distinct person ids

  friend bool operator==(const ManifestStats&, const ManifestStats&) = default;
};

struct Manifest {
  std::vector<ManifestRecord> records;
  ManifestStats stats;
};

// Throws kParse ("<source>:<line>: ..."), kMissingField (naming line and
// field) and kDuplicateId.
Manifest ParseManifest(std::istream& in, std::string_view source = "manifest");
Manifest LoadManifest(const std::filesystem::path& path);

ManifestStats ComputeStats(std::span<const ManifestRecord> records);

std::string ManifestRecordToJson(const ManifestRecord& record);

// Attribute token -> phrase ("wearing a skirt"). Insertion order is kept.
class AttributeTemplates {
 public:
  // The shipped table (data/attribute_templates.tsv).
  static const AttributeTemplates& Defaults();

  // "attribute<TAB>phrase" lines; '#' comments and blank lines ignored.
  // Throws kParse on a malformed line or an empty phrase, kDuplicateId on a
  // repeated attribute.
  static AttributeTemplates Parse(std::istream& in,
                                  std::string_view source = "templates");
  static AttributeTemplates Load(const std::filesystem::path& path);

  void Add(std::string attribute, std::string phrase);

  // nullopt for an unknown attribute.
  std::optional<std::string> Find(std::string_view attribute) const;
  size_t size() const { return order_.size(); }
  const std::vector<std::string>& attributes() const { return order_; }

 private:
  std::map<std::string, std::string, std::less<>> phrases_;
  std::vector<std::string> order_;
};

inline constexpr size_t kDefaultMaxCaptionWords = 21;

// Joins one phrase per attribute, in the given order, with ", ". Whole
// phrases are dropped from the end so the word count never exceeds
// `max_words`. Unknown attributes become "has <attribute>" and are appended
// to `unknown` when non-null. Throws kInvalidArgument for an empty attribute
// list, max_words == 0, or a first phrase longer than max_words.
Caption AttributesToCaption(std::span<const std::string> attributes,
                            const AttributeTemplates& templates,
                            size_t max_words = kDefaultMaxCaptionWords,
                            std::vector<std::string>* unknown = nullptr);

}  // namespace textaug

#endif  // TEXTAUG_DATASET_H_
