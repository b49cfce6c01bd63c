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

#include "textaug/provider.h"

#include <cctype>
#include <utility>

#include "textaug/error.h"
#include "textaug/random.h"

namespace textaug {
namespace {

constexpr uint64_t kImageSaltTweak = 0x696d616765ULL;  // "image"

bool IsWordChar(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

}  // namespace

std::string MockToken(std::string_view word) {
  size_t begin = 0;
  size_t end = word.size();
  while (begin < end && !IsWordChar(word[begin])) ++begin;
  while (end > begin && !IsWordChar(word[end - 1])) --end;
  // All-punctuation words hash as themselves.
  if (begin == end) return std::string(word);
  std::string token(word.substr(begin, end - begin));
  for (char& c : token) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return token;
}

EmbeddingVector MockEmbed(const Caption& caption, size_t dim, uint64_t salt) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidArgument, "mock embedding dim must be >= 2");
  }
  ValidateCaption(caption);
  std::vector<double> values(dim, 0.0);
  for (const std::string& word : SplitWords(caption.text)) {
    values[HashBytes(MockToken(word), salt) % dim] += 1.0;
  }
  return L2Normalize(EmbeddingVector(std::move(values)));
}

MockProvider::MockProvider(size_t dim, uint64_t salt) : dim_(dim), salt_(salt) {
  if (dim_ < 2) {
    throw Error(ErrorCode::kInvalidArgument, "mock embedding dim must be >= 2");
  }
}

std::vector<EmbeddingVector> MockProvider::EmbedText(
    std::span<const Caption> captions) const {
  std::vector<EmbeddingVector> out;
  out.reserve(captions.size());
  for (const Caption& caption : captions) {
    out.push_back(MockEmbed(caption, dim_, salt_));
  }
  return out;
}

std::vector<EmbeddingVector> MockProvider::EmbedImage(
    std::span<const std::string> image_refs) const {
  std::vector<EmbeddingVector> out;
  out.reserve(image_refs.size());
  for (const std::string& ref : image_refs) {
    out.push_back(MockEmbed(Caption{ref, ref}, dim_, salt_ ^ kImageSaltTweak));
  }
  return out;
}

FileProvider::Table FileProvider::Index(EmbeddingFile file, const char* what) {
  Table table;
  table.reserve(file.records.size());
  for (EmbeddingRecord& record : file.records) {
    const std::string id = record.id;
    if (!table.emplace(id, std::move(record.values)).second) {
      throw Error(ErrorCode::kDuplicateId,
                  std::string("duplicate ") + what + " embedding id '" + id +
                      "'");
    }
  }
  return table;
}

FileProvider::FileProvider(EmbeddingFile text, EmbeddingFile image)
    : text_dim_(text.dim),
      image_dim_(image.dim),
      text_(Index(std::move(text), "text")),
      image_(Index(std::move(image), "image")) {}

std::vector<EmbeddingVector> FileProvider::EmbedText(
    std::span<const Caption> captions) const {
  std::vector<EmbeddingVector> out;
  out.reserve(captions.size());
  for (const Caption& caption : captions) {
    auto it = text_.find(caption.id);
    if (it == text_.end()) {
      throw Error(ErrorCode::kMissingField,
                  "no text embedding for id '" + caption.id + "'");
    }
    out.push_back(EmbeddingVector::FromFloats(it->second));
  }
  return out;
}

std::vector<EmbeddingVector> FileProvider::EmbedImage(
    std::span<const std::string> image_refs) const {
  std::vector<EmbeddingVector> out;
  out.reserve(image_refs.size());
  for (const std::string& ref : image_refs) {
    auto it = image_.find(ref);
    if (it == image_.end()) {
      throw Error(ErrorCode::kMissingField,
                  "no image embedding for id '" + ref + "'");
    }
    out.push_back(EmbeddingVector::FromFloats(it->second));
  }
  return out;
}

}  // namespace textaug
