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

// EMB1 embedding interchange format. All integers and floats little-endian.
//
//   offset  size  field
//   0       8     magic "EMBF0001"
//   8       4     u32 dim
//   12      8     u64 count
//   20      ...   count records:
//                   u16 id length L
//                   L   id bytes (UTF-8)
//                   4*dim  dim x f32
//
// A JSON sidecar ("<file>.meta.json") carries provider, model tag, dim and
// free-form creation parameters.

#ifndef TEXTAUG_EMB_FILE_H_
#define TEXTAUG_EMB_FILE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace textaug {

inline constexpr std::string_view kEmbMagic = "EMBF0001";
inline constexpr std::string_view kEmbFormatVersion = "EMB1";

struct EmbeddingRecord {
  std::string id;
  std::vector<float> values;

  friend bool operator==(const EmbeddingRecord&,
                         const EmbeddingRecord&) = default;
};

struct EmbeddingFile {
  uint32_t dim = 0;
  std::vector<EmbeddingRecord> records;
};

// Throws kDimensionMismatch if a record's length differs from `dim`,
// kInvalidArgument for dim == 0 or an id longer than 65535 bytes.
void WriteEmbeddings(std::ostream& out, uint32_t dim,
                     const std::vector<EmbeddingRecord>& records);

// Throws kBadMagic, kTruncated (short header, fewer records than declared),
// kParse (bytes after the last declared record, dim == 0) and
// kDimensionMismatch when `expected_dim` is given and differs from the header.
EmbeddingFile ReadEmbeddings(std::istream& in,
                             std::optional<uint32_t> expected_dim = {});

// File variants; IO failures throw kIo. Writes go to a temp file that is
// renamed into place.
void WriteEmbeddingFile(const std::filesystem::path& path, uint32_t dim,
                        const std::vector<EmbeddingRecord>& records);
EmbeddingFile ReadEmbeddingFile(const std::filesystem::path& path,
                                std::optional<uint32_t> expected_dim = {});

struct EmbeddingMetadata {
  std::string provider;
  std::string model_tag;
  uint32_t dim = 0;
  nlohmann::json params = nlohmann::json::object();
};

std::filesystem::path SidecarPath(const std::filesystem::path& emb_path);

void WriteSidecar(const std::filesystem::path& emb_path,
                  const EmbeddingMetadata& meta);
// Returns nullopt when no sidecar exists. Throws kParse on malformed JSON.
std::optional<EmbeddingMetadata> ReadSidecar(
    const std::filesystem::path& emb_path);

}  // namespace textaug

#endif  // TEXTAUG_EMB_FILE_H_
