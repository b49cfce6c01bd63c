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

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/cli.h"
#include "textaug/augment.h"
#include "textaug/dataset.h"
#include "textaug/emb_file.h"
#include "textaug/embedding.h"
#include "textaug/error.h"
#include "textaug/evaluate.h"
#include "textaug/gallery_index.h"
#include "textaug/pipeline.h"
#include "textaug/provider.h"

namespace textaug::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

// Runs a command body and maps failures onto exit codes.
int Guard(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::kIo ? kExitIo : kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error (io): " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

// Converts library argument errors raised while interpreting flags.
template <typename F>
auto FlagValue(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void CheckOutputsDistinct(const std::vector<fs::path>& inputs,
                          const std::vector<fs::path>& outputs) {
  std::error_code ec;
  for (const fs::path& out : outputs) {
    const fs::path o = fs::weakly_canonical(out, ec);
    for (const fs::path& in : inputs) {
      if (in.empty()) continue;
      if (fs::weakly_canonical(in, ec) == o) {
        throw UsageError("output " + out.string() + " would overwrite input " +
                         in.string());
      }
    }
  }
}

void WriteFileAtomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string());
    out << content;
    out.close();
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename to " + path.string());
}

// Calls `fn(line_number, object)` for every nonblank line.
void ForEachJsonLine(const fs::path& path,
                     const std::function<void(size_t, const json&)>& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(line) +
                                         ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(line) +
                                         ": expected a JSON object");
    }
    fn(line, obj);
  }
}

std::optional<std::string> OptionalId(const json& obj, const char* field,
                                      const fs::path& path, size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line) +
                                     ": field '" + field +
                                     "' must be a string or integer");
}

std::string RequiredString(const json& obj, const char* field,
                           const fs::path& path, size_t line) {
  std::optional<std::string> value = OptionalId(obj, field, path, line);
  if (!value) {
    throw Error(ErrorCode::kMissingField, path.string() + ":" +
                                              std::to_string(line) +
                                              ": missing field '" + field + "'");
  }
  return *value;
}

std::vector<size_t> ParseKs(const std::string& text) {
  std::vector<size_t> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long value = -1;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || value < 1) {
      throw UsageError("--ks expects comma-separated positive integers, got '" +
                       text + "'");
    }
    ks.push_back(static_cast<size_t>(value));
  }
  ProtocolConfig cfg;
  cfg.ks = ks;
  FlagValue([&] {
    cfg.Validate();
    return 0;
  });
  return ks;
}

ProtocolConfig MakeProtocol(const ProtocolOptions& opts) {
  ProtocolConfig cfg;
  cfg.ks = ParseKs(opts.ks);
  cfg.exclude_same_camera = opts.exclude_same_camera;
  cfg.exclude_self = opts.exclude_self;
  if (opts.threads == 0) throw UsageError("--threads must be >= 1");
  return cfg;
}

AugmentationConfig MakeAugmentConfig(size_t k, double p_mix,
                                     double max_mask_fraction,
                                     const std::string& strategy, size_t window,
                                     const std::string& cutout_policy,
                                     const std::string& special_token,
                                     uint64_t seed) {
  return FlagValue([&] {
    AugmentationConfig cfg;
    cfg.k = k;
    cfg.WithMixProbability(p_mix);
    cfg.max_mask_fraction = max_mask_fraction;
    cfg.strategy = SegmentationStrategy{ParseStrategyKind(strategy), window};
    cfg.cutout_policy = ParseCutoutPolicy(cutout_policy);
    cfg.special_token = special_token;
    cfg.seed = seed;
    cfg.Validate();
    return cfg;
  });
}

PipelineConfig MakePipelineConfig(const PipelineOptions& opts) {
  PipelineConfig cfg;
  cfg.mode = FlagValue([&] { return ParseQueryMode(opts.mode); });
  cfg.gallery_mode =
      FlagValue([&] { return ParseGalleryMode(opts.gallery_mode); });
  cfg.variants = opts.k;
  // k == 0 is the no-augmentation baseline; validate the rest with k = 1.
  cfg.augment = MakeAugmentConfig(
      opts.k == 0 ? 1 : opts.k, opts.p_mix, opts.max_mask_fraction,
      opts.strategy, opts.window, opts.cutout_policy, opts.special_token,
      opts.seed);
  cfg.include_original = opts.include_original;
  cfg.normalize_aggregate = opts.normalize;
  cfg.normalize_halves = opts.normalize;
  return cfg;
}

ordered_json PipelineSnapshot(const PipelineOptions& opts) {
  ordered_json j;
  j["mode"] = opts.mode;
  j["gallery_mode"] = opts.gallery_mode;
  j["k"] = opts.k;
  j["p_mix"] = opts.p_mix;
  j["max_mask_fraction"] = opts.max_mask_fraction;
  j["strategy"] = opts.strategy;
  j["window"] = opts.window;
  j["cutout_policy"] = opts.cutout_policy;
  j["include_original"] = opts.include_original;
  j["normalize"] = opts.normalize;
  j["seed"] = opts.seed;
  return j;
}

struct GalleryMeta {
  std::string person_id;
  std::optional<std::string> camera_id;
};

GalleryIndex LoadGallery(const GalleryOptions& opts) {
  const DistanceMetric metric =
      FlagValue([&] { return ParseMetric(opts.metric); });
  std::map<std::string, GalleryMeta> meta;
  ForEachJsonLine(opts.gallery_meta, [&](size_t line, const json& obj) {
    const std::string id =
        RequiredString(obj, "entry_id", opts.gallery_meta, line);
    GalleryMeta m{RequiredString(obj, "person_id", opts.gallery_meta, line),
                  OptionalId(obj, "camera_id", opts.gallery_meta, line)};
    if (!meta.emplace(id, std::move(m)).second) {
      throw Error(ErrorCode::kDuplicateId,
                  opts.gallery_meta.string() + ":" + std::to_string(line) +
                      ": duplicate entry_id '" + id + "'");
    }
  });
  EmbeddingFile file = ReadEmbeddingFile(opts.gallery);
  std::vector<GalleryEntry> entries;
  entries.reserve(file.records.size());
  for (const EmbeddingRecord& record : file.records) {
    auto it = meta.find(record.id);
    if (it == meta.end()) {
      throw Error(ErrorCode::kMissingField,
                  "gallery embedding '" + record.id + "' has no row in " +
                      opts.gallery_meta.string());
    }
    EmbeddingVector v = EmbeddingVector::FromFloats(record.values);
    const size_t dim = v.dim();
    entries.push_back(GalleryEntry{record.id, it->second.person_id,
                                   it->second.camera_id,
                                   JointEmbedding(std::move(v), dim, 0)});
  }
  return GalleryIndex::Build(std::move(entries), metric);
}

struct QueryMeta {
  std::string person_id;
  std::optional<std::string> camera_id;
  std::optional<std::string> source_entry_id;
};

std::vector<QueryRecord> LoadQueries(const fs::path& emb_path,
                                     const fs::path& meta_path,
                                     size_t gallery_dim) {
  std::map<std::string, QueryMeta> meta;
  ForEachJsonLine(meta_path, [&](size_t line, const json& obj) {
    const std::string id = RequiredString(obj, "query_id", meta_path, line);
    QueryMeta m{RequiredString(obj, "person_id", meta_path, line),
                OptionalId(obj, "camera_id", meta_path, line),
                OptionalId(obj, "source_entry_id", meta_path, line)};
    if (!meta.emplace(id, std::move(m)).second) {
      throw Error(ErrorCode::kDuplicateId, meta_path.string() + ":" +
                                               std::to_string(line) +
                                               ": duplicate query_id '" + id +
                                               "'");
    }
  });
  EmbeddingFile file = ReadEmbeddingFile(emb_path);
  if (file.dim != gallery_dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query embeddings have dim " + std::to_string(file.dim) +
                    " but gallery embeddings have dim " +
                    std::to_string(gallery_dim));
  }
  std::vector<QueryRecord> queries;
  queries.reserve(file.records.size());
  for (const EmbeddingRecord& record : file.records) {
    auto it = meta.find(record.id);
    if (it == meta.end()) {
      throw Error(ErrorCode::kMissingField,
                  "query embedding '" + record.id + "' has no row in " +
                      meta_path.string());
    }
    EmbeddingVector v = EmbeddingVector::FromFloats(record.values);
    const size_t dim = v.dim();
    queries.push_back(QueryRecord{record.id,
                                  JointEmbedding(std::move(v), dim, 0),
                                  it->second.person_id, it->second.camera_id,
                                  it->second.source_entry_id});
  }
  return queries;
}

fs::path CsvPathFor(const fs::path& json_path,
                    const std::optional<fs::path>& csv) {
  if (csv) return *csv;
  fs::path out = json_path;
  out.replace_extension(".csv");
  return out;
}

void WriteReport(const EvalReport& report, const fs::path& json_path,
                 const fs::path& csv_path, const ordered_json* pipeline,
                 std::ostream& out) {
  ordered_json j = ordered_json::parse(ReportToJson(report).dump());
  j["format"] = {{"embeddings", kEmbFormatVersion},
                 {"manifest", kManifestSchemaVersion}};
  if (pipeline != nullptr) j["pipeline"] = *pipeline;
  WriteFileAtomic(json_path, j.dump(2) + "\n");
  WriteFileAtomic(csv_path, ReportToCsv(report));
  out << "evaluated " << report.n_queries << " of " << report.n_total
      << " queries";
  for (const auto& [k, value] : report.cmc) {
    out << "  cmc@" << k << "=" << FormatDouble(value);
  }
  out << "\n";
  if (report.n_queries < report.n_total) {
    out << "warning: " << report.n_total - report.n_queries
        << " queries have no feasible match and were excluded\n";
  }
}

ProjectionMatrix LoadProjection(const fs::path& path) {
  EmbeddingFile file = ReadEmbeddingFile(path);
  std::vector<double> entries;
  for (const EmbeddingRecord& row : file.records) {
    entries.insert(entries.end(), row.values.begin(), row.values.end());
  }
  return ProjectionMatrix(file.records.size(), file.dim, std::move(entries));
}

void WriteJoint(const fs::path& emb_path,
                const std::vector<std::pair<std::string, const JointEmbedding*>>&
                    rows,
                const std::string& provider, const PipelineOptions& opts) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "nothing to write");
  const JointEmbedding& first = *rows.front().second;
  std::vector<EmbeddingRecord> records;
  records.reserve(rows.size());
  for (const auto& [id, joint] : rows) {
    records.push_back(EmbeddingRecord{id, joint->vector().ToFloats()});
  }
  WriteEmbeddingFile(emb_path, static_cast<uint32_t>(first.dim()), records);
  EmbeddingMetadata meta;
  meta.provider = provider;
  meta.model_tag = "joint";
  meta.dim = static_cast<uint32_t>(first.dim());
  meta.params = json::parse(PipelineSnapshot(opts).dump());
  meta.params["text_dim"] = first.text_dim();
  meta.params["image_dim"] = first.image_dim();
  WriteSidecar(emb_path, meta);
}

}  // namespace

int CmdAugment(const AugmentOptions& opts, std::ostream& out,
               std::ostream& err) {
  return Guard(err, [&] {
    const AugmentationConfig cfg = MakeAugmentConfig(
        opts.k, opts.p_mix, opts.max_mask_fraction, opts.strategy, opts.window,
        opts.cutout_policy, opts.special_token, opts.seed);
    CheckOutputsDistinct({opts.in}, {opts.out});

    std::vector<Caption> captions;
    std::set<std::string> ids;
    ForEachJsonLine(opts.in, [&](size_t line, const json& obj) {
      Caption caption{RequiredString(obj, "id", opts.in, line),
                      RequiredString(obj, "text", opts.in, line)};
      if (!ids.insert(caption.id).second) {
        throw Error(ErrorCode::kDuplicateId,
                    opts.in.string() + ":" + std::to_string(line) +
                        ": duplicate caption id '" + caption.id + "'");
      }
      try {
        ValidateCaption(caption);
      } catch (const Error& e) {
        throw Error(e.code(), opts.in.string() + ":" + std::to_string(line) +
                                  ": " + e.what());
      }
      captions.push_back(std::move(caption));
    });
    if (captions.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no captions in " + opts.in.string());
    }

    std::string body;
    for (const Caption& caption : captions) {
      const std::vector<Variant> variants =
          opts.include_original ? AugmentWithOriginal(caption, cfg)
                                : CutMixOut(caption, cfg);
      for (const Variant& v : variants) {
        ordered_json row;
        row["id"] = v.caption.id;
        row["text"] = v.caption.text;
        row["parent_id"] = v.parent_id;
        row["variant_index"] = v.index;
        row["op"] = AugmentOpName(v.op);
        body += row.dump() + "\n";
      }
    }
    WriteFileAtomic(opts.out, body);
    out << "wrote " << captions.size() << " captions x "
        << (opts.k + (opts.include_original ? 1 : 0)) << " variants to "
        << opts.out.string() << "\n";
    return kExitOk;
  });
}

int CmdCaptions(const CaptionsOptions& opts, std::ostream& out,
                std::ostream& err) {
  return Guard(err, [&] {
    if (opts.max_words == 0) throw UsageError("--max-words must be >= 1");
    CheckOutputsDistinct({opts.manifest}, {opts.out});
    const Manifest manifest = LoadManifest(opts.manifest);
    std::optional<AttributeTemplates> templates;
    if (opts.templates) templates = AttributeTemplates::Load(*opts.templates);
    PipelineConfig cfg;
    cfg.max_caption_words = opts.max_words;
    cfg.templates = templates ? &*templates : nullptr;

    std::string body;
    size_t count = 0;
    for (const ManifestRecord& record : manifest.records) {
      for (const Caption& caption : RecordCaptions(record, cfg)) {
        ordered_json row;
        row["id"] = caption.id;
        row["text"] = caption.text;
        body += row.dump() + "\n";
        ++count;
      }
    }
    if (count == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no captions in " + opts.manifest.string());
    }
    WriteFileAtomic(opts.out, body);
    out << "wrote " << count << " captions to " << opts.out.string() << "\n";
    return kExitOk;
  });
}

int CmdBuild(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    PipelineConfig cfg = MakePipelineConfig(opts.pipeline);
    const bool needs_text = cfg.mode != QueryMode::kImage;
    const bool needs_image = cfg.mode != QueryMode::kText ||
                             cfg.gallery_mode == GalleryMode::kImageOnly;
    if (needs_text && !opts.texts) throw UsageError("--texts is required");
    if (needs_image && !opts.images) throw UsageError("--images is required");
    if (needs_text && cfg.variants > 0 && !opts.variants) {
      throw UsageError(
          "--variants is required when --k > 0 (embed the augment output)");
    }
    std::vector<fs::path> inputs = {opts.pipeline.manifest};
    for (const auto& p : {opts.texts, opts.images, opts.variants,
                          opts.text_projection, opts.image_projection}) {
      if (p) inputs.push_back(*p);
    }
    CheckOutputsDistinct(inputs, {opts.out_gallery, opts.out_gallery_meta,
                                  opts.out_queries, opts.out_queries_meta});

    const Manifest manifest = LoadManifest(opts.pipeline.manifest);
    std::optional<AttributeTemplates> templates;
    if (opts.pipeline.templates) {
      templates = AttributeTemplates::Load(*opts.pipeline.templates);
      cfg.templates = &*templates;
    }
    if (opts.text_projection) cfg.text_projection = LoadProjection(*opts.text_projection);
    if (opts.image_projection) cfg.image_projection = LoadProjection(*opts.image_projection);

    EmbeddingFile texts;
    EmbeddingFile images;
    if (needs_text) texts = ReadEmbeddingFile(*opts.texts);
    if (needs_image) images = ReadEmbeddingFile(*opts.images);
    const FileProvider provider(std::move(texts), std::move(images));

    VariantTable table;
    const VariantTable* table_ptr = nullptr;
    if (needs_text && cfg.variants > 0) {
      ForEachJsonLine(*opts.variants, [&](size_t line, const json& obj) {
        const std::string parent =
            RequiredString(obj, "parent_id", *opts.variants, line);
        table[parent].push_back(
            Caption{RequiredString(obj, "id", *opts.variants, line),
                    RequiredString(obj, "text", *opts.variants, line)});
      });
      table_ptr = &table;
    }

    const PipelineData data =
        BuildPipelineData(manifest.records, provider, cfg, table_ptr);

    std::vector<std::pair<std::string, const JointEmbedding*>> rows;
    std::string meta;
    for (const GalleryEntry& e : data.gallery) {
      rows.emplace_back(e.entry_id, &e.embedding);
      ordered_json row;
      row["entry_id"] = e.entry_id;
      row["person_id"] = e.person_id;
      if (e.camera_id) row["camera_id"] = *e.camera_id;
      meta += row.dump() + "\n";
    }
    WriteJoint(opts.out_gallery, rows, provider.name(), opts.pipeline);
    WriteFileAtomic(opts.out_gallery_meta, meta);

    rows.clear();
    meta.clear();
    for (const QueryRecord& q : data.queries) {
      rows.emplace_back(q.query_id, &q.embedding);
      ordered_json row;
      row["query_id"] = q.query_id;
      row["person_id"] = q.person_id;
      if (q.camera_id) row["camera_id"] = *q.camera_id;
      if (q.source_entry_id) row["source_entry_id"] = *q.source_entry_id;
      meta += row.dump() + "\n";
    }
    WriteJoint(opts.out_queries, rows, provider.name(), opts.pipeline);
    WriteFileAtomic(opts.out_queries_meta, meta);
    out << "built " << data.gallery.size() << " gallery entries and "
        << data.queries.size() << " queries\n";
    return kExitOk;
  });
}

int CmdIndex(const IndexOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    CheckOutputsDistinct({opts.gallery.gallery, opts.gallery.gallery_meta},
                         {opts.out});
    const GalleryIndex index = LoadGallery(opts.gallery);
    std::set<std::string> people;
    std::set<std::string> cameras;
    for (const GalleryEntry& e : index.entries()) {
      people.insert(e.person_id);
      if (e.camera_id) cameras.insert(*e.camera_id);
    }
    ordered_json j;
    j["entries"] = index.size();
    j["dim"] = index.dim();
    j["metric"] = MetricName(index.metric());
    j["identities"] = people.size();
    j["cameras"] = cameras.size();
    WriteFileAtomic(opts.out, j.dump(2) + "\n");
    out << "indexed " << index.size() << " entries of dim " << index.dim()
        << "\n";
    return kExitOk;
  });
}

int CmdQuery(const QueryOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (opts.top_k == 0) throw UsageError("--top-k must be >= 1");
    CheckOutputsDistinct({opts.gallery.gallery, opts.gallery.gallery_meta,
                          opts.queries, opts.queries_meta},
                         {opts.out});
    const GalleryIndex index = LoadGallery(opts.gallery);
    const std::vector<QueryRecord> queries =
        LoadQueries(opts.queries, opts.queries_meta, index.dim());
    std::string body;
    for (const QueryRecord& q : queries) {
      const RankedList ranked = index.Search(q.query_id, q.embedding, opts.top_k);
      ordered_json row;
      row["query_id"] = ranked.query_id;
      row["hits"] = ordered_json::array();
      for (const Hit& hit : ranked.hits) {
        ordered_json h;
        h["entry_id"] = hit.entry_id;
        h["person_id"] = hit.person_id;
        h["distance"] = hit.distance;
        row["hits"].push_back(std::move(h));
      }
      body += row.dump() + "\n";
    }
    WriteFileAtomic(opts.out, body);
    out << "answered " << queries.size() << " queries\n";
    return kExitOk;
  });
}

int CmdEvaluate(const EvaluateOptions& opts, std::ostream& out,
                std::ostream& err) {
  return Guard(err, [&] {
    const ProtocolConfig protocol = MakeProtocol(opts.protocol);
    const fs::path csv = CsvPathFor(opts.out, opts.csv);
    CheckOutputsDistinct({opts.gallery.gallery, opts.gallery.gallery_meta,
                          opts.queries, opts.queries_meta},
                         {opts.out, csv});
    const GalleryIndex index = LoadGallery(opts.gallery);
    const std::vector<QueryRecord> queries =
        LoadQueries(opts.queries, opts.queries_meta, index.dim());
    const EvalReport report =
        EvaluateProtocol(queries, index, protocol, opts.protocol.threads);
    WriteReport(report, opts.out, csv, nullptr, out);
    return kExitOk;
  });
}

int CmdPipelineMock(const MockPipelineOptions& opts, std::ostream& out,
                    std::ostream& err) {
  return Guard(err, [&] {
    PipelineConfig cfg = MakePipelineConfig(opts.pipeline);
    const ProtocolConfig protocol = MakeProtocol(opts.protocol);
    const DistanceMetric metric =
        FlagValue([&] { return ParseMetric(opts.metric); });
    if (opts.dim < 2) throw UsageError("--dim must be >= 2");
    const fs::path csv = CsvPathFor(opts.out, opts.csv);
    std::vector<fs::path> inputs = {opts.pipeline.manifest};
    if (opts.pipeline.templates) inputs.push_back(*opts.pipeline.templates);
    CheckOutputsDistinct(inputs, {opts.out, csv});

    const Manifest manifest = LoadManifest(opts.pipeline.manifest);
    std::optional<AttributeTemplates> templates;
    if (opts.pipeline.templates) {
      templates = AttributeTemplates::Load(*opts.pipeline.templates);
      cfg.templates = &*templates;
    }
    const MockProvider provider(opts.dim, opts.salt);
    PipelineData data = BuildPipelineData(manifest.records, provider, cfg);
    const GalleryIndex index =
        GalleryIndex::Build(std::move(data.gallery), metric);
    const EvalReport report =
        EvaluateProtocol(data.queries, index, protocol, opts.protocol.threads);

    ordered_json snapshot = PipelineSnapshot(opts.pipeline);
    snapshot["provider"] = provider.name();
    snapshot["dim"] = opts.dim;
    snapshot["salt"] = opts.salt;
    snapshot["manifest_stats"] = {{"images", manifest.stats.images},
                                  {"texts", manifest.stats.texts},
                                  {"cameras", manifest.stats.cameras},
                                  {"identities", manifest.stats.identities}};
    WriteReport(report, opts.out, csv, &snapshot, out);
    return kExitOk;
  });
}

}  // namespace textaug::cli
