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

#include "textaug/emb_file.h"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "textaug/error.h"

namespace textaug {
namespace {

template <typename T>
void PutLe(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

// Reads exactly n bytes or throws kTruncated naming `what`.
void ReadExact(std::istream& in, char* dst, size_t n, const std::string& what) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n) {
    throw Error(ErrorCode::kTruncated, "EMB1 truncated while reading " + what);
  }
}

template <typename T>
T GetLe(std::istream& in, const std::string& what) {
  std::array<unsigned char, sizeof(T)> bytes;
  ReadExact(in, reinterpret_cast<char*>(bytes.data()), bytes.size(), what);
  T value = 0;
  for (size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

}  // namespace

void WriteEmbeddings(std::ostream& out, uint32_t dim,
                     const std::vector<EmbeddingRecord>& records) {
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "EMB1 dim must be >= 1");
  }
  for (const EmbeddingRecord& record : records) {
    if (record.values.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "record '" + record.id + "' has dim " +
                      std::to_string(record.values.size()) +
                      ", header declares " + std::to_string(dim));
    }
    if (record.id.size() > 0xffff) {
      throw Error(ErrorCode::kInvalidArgument,
                  "record id longer than 65535 bytes");
    }
  }
  out.write(kEmbMagic.data(), kEmbMagic.size());
  PutLe<uint32_t>(out, dim);
  PutLe<uint64_t>(out, records.size());
  for (const EmbeddingRecord& record : records) {
    PutLe<uint16_t>(out, static_cast<uint16_t>(record.id.size()));
    out.write(record.id.data(), static_cast<std::streamsize>(record.id.size()));
    for (float f : record.values) PutLe<uint32_t>(out, std::bit_cast<uint32_t>(f));
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing EMB1 stream");
}

EmbeddingFile ReadEmbeddings(std::istream& in,
                             std::optional<uint32_t> expected_dim) {
  std::array<char, 8> magic;
  in.read(magic.data(), magic.size());
  if (static_cast<size_t>(in.gcount()) != magic.size() ||
      std::string_view(magic.data(), magic.size()) != kEmbMagic) {
    throw Error(ErrorCode::kBadMagic, "not an EMB1 file (bad magic)");
  }
  EmbeddingFile file;
  file.dim = GetLe<uint32_t>(in, "header dim");
  const uint64_t count = GetLe<uint64_t>(in, "header count");
  if (file.dim == 0) throw Error(ErrorCode::kParse, "EMB1 header has dim 0");
  if (expected_dim && *expected_dim != file.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "EMB1 header dim " + std::to_string(file.dim) +
                    " does not match expected dim " +
                    std::to_string(*expected_dim));
  }
  // Reserve conservatively; `count` is untrusted.
  file.records.reserve(static_cast<size_t>(std::min<uint64_t>(count, 1 << 16)));
  std::vector<unsigned char> payload(size_t{4} * file.dim);
  for (uint64_t r = 0; r < count; ++r) {
    const std::string where = "record " + std::to_string(r) + " of " +
                              std::to_string(count);
    EmbeddingRecord record;
    const uint16_t id_len = GetLe<uint16_t>(in, where);
    record.id.resize(id_len);
    ReadExact(in, record.id.data(), id_len, where);
    ReadExact(in, reinterpret_cast<char*>(payload.data()), payload.size(),
              where);
    record.values.resize(file.dim);
    for (size_t d = 0; d < file.dim; ++d) {
      const uint32_t bits = static_cast<uint32_t>(payload[4 * d]) |
                            static_cast<uint32_t>(payload[4 * d + 1]) << 8 |
                            static_cast<uint32_t>(payload[4 * d + 2]) << 16 |
                            static_cast<uint32_t>(payload[4 * d + 3]) << 24;
      record.values[d] = std::bit_cast<float>(bits);
    }
    file.records.push_back(std::move(record));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kParse, "EMB1 has trailing bytes after " +
                                       std::to_string(count) + " records");
  }
  return file;
}

void WriteEmbeddingFile(const std::filesystem::path& path, uint32_t dim,
                        const std::vector<EmbeddingRecord>& records) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    }
    WriteEmbeddings(out, dim, records);
    out.close();
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

EmbeddingFile ReadEmbeddingFile(const std::filesystem::path& path,
                                std::optional<uint32_t> expected_dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  try {
    return ReadEmbeddings(in, expected_dim);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::filesystem::path SidecarPath(const std::filesystem::path& emb_path) {
  std::filesystem::path out = emb_path;
  out += ".meta.json";
  return out;
}

void WriteSidecar(const std::filesystem::path& emb_path,
                  const EmbeddingMetadata& meta) {
  const nlohmann::json j = {{"format", kEmbFormatVersion},
                            {"provider", meta.provider},
                            {"model_tag", meta.model_tag},
                            {"dim", meta.dim},
                            {"params", meta.params}};
  const std::filesystem::path path = SidecarPath(emb_path);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

std::optional<EmbeddingMetadata> ReadSidecar(
    const std::filesystem::path& emb_path) {
  const std::filesystem::path path = SidecarPath(emb_path);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    EmbeddingMetadata meta;
    meta.provider = j.value("provider", "");
    meta.model_tag = j.value("model_tag", "");
    meta.dim = j.at("dim").get<uint32_t>();
    meta.params = j.value("params", nlohmann::json::object());
    return meta;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace textaug
