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

#ifndef TEXTAUG_TOOLS_CLI_CLI_H_
#define TEXTAUG_TOOLS_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace textaug::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitIo = 4;

// Bad flag values detected before any IO happens.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AugmentOptions {
  std::filesystem::path in;
  std::filesystem::path out;
  size_t k = 8;
  double p_mix = 0.5;
  double max_mask_fraction = 0.5;
  std::string strategy = "punctuation";
  size_t window = 3;
  std::string cutout_policy = "delete";
  std::string special_token = "[MASK]";
  bool include_original = true;
  uint64_t seed = 0;
};

struct CaptionsOptions {
  std::filesystem::path manifest;
  std::filesystem::path out;
  std::optional<std::filesystem::path> templates;
  size_t max_words = 21;
};

// Shared by build and pipeline-mock.
struct PipelineOptions {
  std::filesystem::path manifest;
  std::string mode = "text";
  std::string gallery_mode = "joint";
  size_t k = 8;
  double p_mix = 0.5;
  double max_mask_fraction = 0.5;
  std::string strategy = "punctuation";
  size_t window = 3;
  std::string cutout_policy = "delete";
  std::string special_token = "[MASK]";
  bool include_original = true;
  bool normalize = true;
  std::optional<std::filesystem::path> templates;
  uint64_t seed = 0;
};

struct BuildOptions {
  PipelineOptions pipeline;
  std::optional<std::filesystem::path> texts;
  std::optional<std::filesystem::path> images;
  std::optional<std::filesystem::path> variants;
  std::optional<std::filesystem::path> text_projection;
  std::optional<std::filesystem::path> image_projection;
  std::filesystem::path out_gallery;
  std::filesystem::path out_gallery_meta;
  std::filesystem::path out_queries;
  std::filesystem::path out_queries_meta;
};

struct GalleryOptions {
  std::filesystem::path gallery;
  std::filesystem::path gallery_meta;
  std::string metric = "cosine";
};

struct IndexOptions {
  GalleryOptions gallery;
  std::filesystem::path out;
};

struct QueryOptions {
  GalleryOptions gallery;
  std::filesystem::path queries;
  std::filesystem::path queries_meta;
  size_t top_k = 10;
  std::filesystem::path out;
};

struct ProtocolOptions {
  std::string ks = "1,5,10,20";
  bool exclude_same_camera = false;
  bool exclude_self = true;
  size_t threads = 1;
};

struct EvaluateOptions {
  GalleryOptions gallery;
  std::filesystem::path queries;
  std::filesystem::path queries_meta;
  ProtocolOptions protocol;
  std::filesystem::path out;
  std::optional<std::filesystem::path> csv;
};

struct MockPipelineOptions {
  PipelineOptions pipeline;
  std::string metric = "cosine";
  size_t dim = 256;
  uint64_t salt = 0;
  ProtocolOptions protocol;
  std::filesystem::path out;
  std::optional<std::filesystem::path> csv;
};

// Each returns a process exit code and writes diagnostics to `err`.
int CmdAugment(const AugmentOptions& opts, std::ostream& out, std::ostream& err);
int CmdCaptions(const CaptionsOptions& opts, std::ostream& out,
                std::ostream& err);
int CmdBuild(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int CmdIndex(const IndexOptions& opts, std::ostream& out, std::ostream& err);
int CmdQuery(const QueryOptions& opts, std::ostream& out, std::ostream& err);
int CmdEvaluate(const EvaluateOptions& opts, std::ostream& out,
                std::ostream& err);
int CmdPipelineMock(const MockPipelineOptions& opts, std::ostream& out,
                    std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

std::string VersionString();

}  // namespace textaug::cli

#endif  // TEXTAUG_TOOLS_CLI_CLI_H_
