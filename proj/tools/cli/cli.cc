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

#include "cli/cli.h"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "textaug/dataset.h"
#include "textaug/emb_file.h"

namespace textaug::cli {
namespace {

void AddAugmentFlags(CLI::App* cmd, size_t* k, double* p_mix,
                     double* max_mask_fraction, std::string* strategy,
                     size_t* window, std::string* cutout_policy,
                     std::string* special_token, bool* include_original) {
  cmd->add_option("--k", *k, "Variants per caption")->capture_default_str();
  cmd->add_option("--p-mix", *p_mix, "Probability of CutMix per variant")
      ->capture_default_str();
  cmd->add_option("--max-mask-fraction", *max_mask_fraction,
                  "Largest masked share of segments")
      ->capture_default_str();
  cmd->add_option("--strategy", *strategy, "punctuation | fixed-window")
      ->capture_default_str();
  cmd->add_option("--window", *window, "Words per fixed-window segment")
      ->capture_default_str();
  cmd->add_option("--cutout-policy", *cutout_policy, "delete | special-token")
      ->capture_default_str();
  cmd->add_option("--special-token", *special_token,
                  "Replacement for masked runs under special-token")
      ->capture_default_str();
  cmd->add_flag("--include-original,!--no-include-original", *include_original,
                "Emit the unmodified caption as variant 0");
}

void AddPipelineFlags(CLI::App* cmd, PipelineOptions* p) {
  cmd->add_option("--manifest", p->manifest, "Manifest JSONL")->required();
  cmd->add_option("--mode", p->mode, "text | image | mm")
      ->capture_default_str();
  cmd->add_option("--gallery-mode", p->gallery_mode, "joint | image")
      ->capture_default_str();
  AddAugmentFlags(cmd, &p->k, &p->p_mix, &p->max_mask_fraction, &p->strategy,
                  &p->window, &p->cutout_policy, &p->special_token,
                  &p->include_original);
  cmd->add_flag("--normalize,!--no-normalize", p->normalize,
                "L2-normalize aggregates and fused halves");
  cmd->add_option("--templates", p->templates, "Attribute template TSV");
}

void AddGalleryFlags(CLI::App* cmd, GalleryOptions* g) {
  cmd->add_option("--gallery", g->gallery, "Gallery EMB1 file")->required();
  cmd->add_option("--gallery-meta", g->gallery_meta, "Gallery metadata JSONL")
      ->required();
  cmd->add_option("--metric", g->metric, "cosine | euclidean")
      ->capture_default_str();
}

void AddProtocolFlags(CLI::App* cmd, ProtocolOptions* p) {
  cmd->add_option("--ks", p->ks, "Comma-separated CMC ranks")
      ->capture_default_str();
  cmd->add_flag("--exclude-same-camera,!--include-same-camera",
                p->exclude_same_camera,
                "Drop gallery entries sharing the query camera");
  cmd->add_flag("--exclude-self,!--include-self", p->exclude_self,
                "Drop the gallery entry the query came from");
  cmd->add_option("--threads", p->threads, "Worker threads")
      ->capture_default_str();
}

}  // namespace

std::string VersionString() {
  return "textaug 0.1.0 (" + std::string(kEmbFormatVersion) + ", " +
         std::string(kManifestSchemaVersion) + ")";
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Test-time text augmentation for multimodal retrieval",
               "textaug"};
  app.set_version_flag("--version", VersionString());
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = 0;
  app.add_option("--seed", seed, "Random seed")->capture_default_str();

  std::function<int()> run;

  AugmentOptions augment;
  CLI::App* cmd = app.add_subcommand("augment", "Write augmented variants");
  cmd->add_option("--in", augment.in, "Captions JSONL")->required();
  cmd->add_option("--out", augment.out, "Variants JSONL")->required();
  AddAugmentFlags(cmd, &augment.k, &augment.p_mix, &augment.max_mask_fraction,
                  &augment.strategy, &augment.window, &augment.cutout_policy,
                  &augment.special_token, &augment.include_original);
  cmd->callback([&] {
    augment.seed = seed;
    run = [&] { return CmdAugment(augment, out, err); };
  });

  CaptionsOptions captions;
  cmd = app.add_subcommand("captions", "Extract or generate manifest captions");
  cmd->add_option("--manifest", captions.manifest, "Manifest JSONL")
      ->required();
  cmd->add_option("--out", captions.out, "Captions JSONL")->required();
  cmd->add_option("--templates", captions.templates, "Attribute template TSV");
  cmd->add_option("--max-words", captions.max_words,
                  "Word limit for generated captions")
      ->capture_default_str();
  cmd->callback([&] { run = [&] { return CmdCaptions(captions, out, err); }; });

  BuildOptions build;
  cmd = app.add_subcommand("build",
                           "Assemble joint gallery and query embeddings");
  AddPipelineFlags(cmd, &build.pipeline);
  cmd->add_option("--texts", build.texts, "Caption EMB1 file");
  cmd->add_option("--images", build.images, "Image EMB1 file");
  cmd->add_option("--variants", build.variants,
                  "Variants JSONL from the augment command");
  cmd->add_option("--text-projection", build.text_projection,
                  "Text projection matrix as EMB1 rows");
  cmd->add_option("--image-projection", build.image_projection,
                  "Image projection matrix as EMB1 rows");
  cmd->add_option("--out-gallery", build.out_gallery, "Gallery EMB1 output")
      ->required();
  cmd->add_option("--out-gallery-meta", build.out_gallery_meta,
                  "Gallery metadata JSONL output")
      ->required();
  cmd->add_option("--out-queries", build.out_queries, "Query EMB1 output")
      ->required();
  cmd->add_option("--out-queries-meta", build.out_queries_meta,
                  "Query metadata JSONL output")
      ->required();
  cmd->callback([&] {
    build.pipeline.seed = seed;
    run = [&] { return CmdBuild(build, out, err); };
  });

  IndexOptions index;
  cmd = app.add_subcommand("index", "Validate a gallery and summarize it");
  AddGalleryFlags(cmd, &index.gallery);
  cmd->add_option("--out", index.out, "Summary JSON")->required();
  cmd->callback([&] { run = [&] { return CmdIndex(index, out, err); }; });

  QueryOptions query;
  cmd = app.add_subcommand("query", "Rank gallery entries for each query");
  AddGalleryFlags(cmd, &query.gallery);
  cmd->add_option("--queries", query.queries, "Query EMB1 file")->required();
  cmd->add_option("--queries-meta", query.queries_meta, "Query metadata JSONL")
      ->required();
  cmd->add_option("--top-k", query.top_k, "Hits per query")
      ->capture_default_str();
  cmd->add_option("--out", query.out, "Ranked lists JSONL")->required();
  cmd->callback([&] { run = [&] { return CmdQuery(query, out, err); }; });

  EvaluateOptions evaluate;
  cmd = app.add_subcommand("evaluate", "Score queries with CMC(k)");
  AddGalleryFlags(cmd, &evaluate.gallery);
  cmd->add_option("--queries", evaluate.queries, "Query EMB1 file")
      ->required();
  cmd->add_option("--queries-meta", evaluate.queries_meta,
                  "Query metadata JSONL")
      ->required();
  AddProtocolFlags(cmd, &evaluate.protocol);
  cmd->add_option("--out", evaluate.out, "Report JSON")->required();
  cmd->add_option("--csv", evaluate.csv,
                  "Report CSV (default: <out> with a .csv extension)");
  cmd->callback([&] { run = [&] { return CmdEvaluate(evaluate, out, err); }; });

  MockPipelineOptions mock;
  cmd = app.add_subcommand("pipeline-mock",
                           "Run the full pipeline with the mock embedder");
  AddPipelineFlags(cmd, &mock.pipeline);
  cmd->add_option("--metric", mock.metric, "cosine | euclidean")
      ->capture_default_str();
  cmd->add_option("--dim", mock.dim, "Mock embedding dimension")
      ->capture_default_str();
  cmd->add_option("--salt", mock.salt, "Mock hash salt")->capture_default_str();
  AddProtocolFlags(cmd, &mock.protocol);
  cmd->add_option("--out", mock.out, "Report JSON")->required();
  cmd->add_option("--csv", mock.csv,
                  "Report CSV (default: <out> with a .csv extension)");
  cmd->callback([&] {
    mock.pipeline.seed = seed;
    run = [&] { return CmdPipelineMock(mock, out, err); };
  });

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return run ? run() : kExitUsage;
}

}  // namespace textaug::cli
