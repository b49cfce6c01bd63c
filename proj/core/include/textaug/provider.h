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

#ifndef TEXTAUG_PROVIDER_H_
#define TEXTAUG_PROVIDER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textaug/emb_file.h"
#include "textaug/embedding.h"
#include "textaug/segmenter.h"

namespace textaug {

// Source of text and image embeddings. Returned vectors have the reported
// dimensions, and the same batch always yields the same vectors.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::vector<EmbeddingVector> EmbedText(
      std::span<const Caption> captions) const = 0;
  // Image references are opaque: a path for encoders, an entry id for
  // file-backed providers.
  virtual std::vector<EmbeddingVector> EmbedImage(
      std::span<const std::string> image_refs) const = 0;

  virtual size_t text_dim() const = 0;
  virtual size_t image_dim() const = 0;
  virtual std::string name() const = 0;

  // True if concurrent calls are not allowed; callers then serialize.
  virtual bool serial() const { return false; }
};

// Bag-of-words hash embedding. Each word (lower-cased, edge punctuation
// trimmed) adds 1 to coordinate Hash(word, salt) mod dim; the sum is
// L2-normalized. Order-insensitive, duplicate-sensitive. Requires dim >= 2.
EmbeddingVector MockEmbed(const Caption& caption, size_t dim, uint64_t salt);

// The token MockEmbed hashes for `word`.
std::string MockToken(std::string_view word);

class MockProvider : public EmbeddingProvider {
 public:
  MockProvider(size_t dim, uint64_t salt);

  std::vector<EmbeddingVector> EmbedText(
      std::span<const Caption> captions) const override;
  // Images are embedded from their reference string under a different salt,
  // so they carry no identity signal.
  std::vector<EmbeddingVector> EmbedImage(
      std::span<const std::string> image_refs) const override;

  size_t text_dim() const override { return dim_; }
  size_t image_dim() const override { return dim_; }
  std::string name() const override { return "mock"; }

 private:
  size_t dim_;
  uint64_t salt_;
};

// Looks embeddings up by id in pre-computed EMB1 files. Text lookups use the
// caption id; image lookups use the image reference as the id.
class FileProvider : public EmbeddingProvider {
 public:
  // Either file may be empty (dim 0) when that modality is unused.
  FileProvider(EmbeddingFile text, EmbeddingFile image);

  std::vector<EmbeddingVector> EmbedText(
      std::span<const Caption> captions) const override;
  std::vector<EmbeddingVector> EmbedImage(
      std::span<const std::string> image_refs) const override;

  bool HasText(const std::string& id) const { return text_.contains(id); }
  bool HasImage(const std::string& id) const { return image_.contains(id); }

  size_t text_dim() const override { return text_dim_; }
  size_t image_dim() const override { return image_dim_; }
  std::string name() const override { return "files"; }

 private:
  using Table = std::unordered_map<std::string, std::vector<float>>;
  static Table Index(EmbeddingFile file, const char* what);

  size_t text_dim_;
  size_t image_dim_;
  Table text_;
  Table image_;
};

}  // namespace textaug

#endif  // TEXTAUG_PROVIDER_H_
