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

#include "textaug/dataset.h"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "textaug/error.h"

namespace textaug {
namespace {

#include "attribute_templates.inc"

using nlohmann::json;

std::string Where(std::string_view source, size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

// Ids may be strings or integers.
std::optional<std::string> IdField(const json& obj, const char* field,
                                   std::string_view source, size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw Error(ErrorCode::kParse, Where(source, line) + ": field '" + field +
                                     "' must be a string or integer");
}

std::string RequiredId(const json& obj, const char* field,
                       std::string_view source, size_t line) {
  std::optional<std::string> value = IdField(obj, field, source, line);
  if (!value) {
    throw Error(ErrorCode::kMissingField,
                Where(source, line) + ": missing field '" + field + "'");
  }
  if (value->empty()) {
    throw Error(ErrorCode::kMissingField,
                Where(source, line) + ": field '" + field + "' is empty");
  }
  return *value;
}

std::vector<std::string> StringList(const json& obj, const char* field,
                                    std::string_view source, size_t line) {
  const json& list = obj.at(field);
  if (!list.is_array()) {
    throw Error(ErrorCode::kParse, Where(source, line) + ": field '" + field +
                                       "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const json& item : list) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kParse, Where(source, line) + ": field '" +
                                         field + "' must contain strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Manifest ParseManifest(std::istream& in, std::string_view source) {
  Manifest manifest;
  std::unordered_set<std::string> ids;
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (IsBlank(text)) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse,
                  Where(source, line) + ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(ErrorCode::kParse,
                  Where(source, line) + ": record must be a JSON object");
    }
    ManifestRecord record;
    record.entry_id = RequiredId(obj, "entry_id", source, line);
    record.person_id = RequiredId(obj, "person_id", source, line);
    record.camera_id = IdField(obj, "camera_id", source, line);
    auto path = obj.find("image_path");
    if (path == obj.end() || !path->is_string()) {
      throw Error(ErrorCode::kMissingField,
                  Where(source, line) + ": missing field 'image_path'");
    }
    record.image_path = path->get<std::string>();
    if (obj.contains("captions")) {
      record.captions = StringList(obj, "captions", source, line);
      for (const std::string& caption : record.captions) {
        if (SplitWords(caption).empty()) {
          throw Error(ErrorCode::kParse,
                      Where(source, line) + ": empty caption");
        }
      }
    }
    if (obj.contains("attributes") && !obj.at("attributes").is_null()) {
      record.attributes = StringList(obj, "attributes", source, line);
    }
    if (!ids.insert(record.entry_id).second) {
      throw Error(ErrorCode::kDuplicateId, Where(source, line) +
                                               ": duplicate entry_id '" +
                                               record.entry_id + "'");
    }
    manifest.records.push_back(std::move(record));
  }
  manifest.stats = ComputeStats(manifest.records);
  return manifest;
}

Manifest LoadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return ParseManifest(in, path.string());
}

ManifestStats ComputeStats(std::span<const ManifestRecord> records) {
  ManifestStats stats;
  std::set<std::string> cameras;
  std::set<std::string> people;
  for (const ManifestRecord& r : records) {
    if (!r.image_path.empty()) ++stats.images;
    if (!r.captions.empty()) {
      stats.texts += r.captions.size();
    } else if (r.attributes && !r.attributes->empty()) {
      ++stats.texts;
    }
    if (r.camera_id) cameras.insert(*r.camera_id);
    people.insert(r.person_id);
  }
  stats.cameras = cameras.size();
  stats.identities = people.size();
  return stats;
}

std::string ManifestRecordToJson(const ManifestRecord& record) {
  json obj = {{"entry_id", record.entry_id},
              {"person_id", record.person_id},
              {"image_path", record.image_path},
              {"captions", record.captions}};
  if (record.camera_id) obj["camera_id"] = *record.camera_id;
  if (record.attributes) obj["attributes"] = *record.attributes;
  return obj.dump();
}

const AttributeTemplates& AttributeTemplates::Defaults() {
  static const AttributeTemplates* const kDefaults = [] {
    std::istringstream in(kDefaultAttributeTemplatesTsv);
    return new AttributeTemplates(Parse(in, "builtin templates"));
  }();
  return *kDefaults;
}

AttributeTemplates AttributeTemplates::Parse(std::istream& in,
                                             std::string_view source) {
  AttributeTemplates templates;
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (IsBlank(text) || text.front() == '#') continue;
    const size_t tab = text.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorCode::kParse,
                  Where(source, line) + ": expected attribute<TAB>phrase");
    }
    std::string phrase = JoinWords(SplitWords(text.substr(tab + 1)));
    if (phrase.empty()) {
      throw Error(ErrorCode::kParse, Where(source, line) + ": empty phrase");
    }
    try {
      templates.Add(text.substr(0, tab), std::move(phrase));
    } catch (const Error& e) {
      throw Error(e.code(), Where(source, line) + ": " + e.what());
    }
  }
  return templates;
}

AttributeTemplates AttributeTemplates::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return Parse(in, path.string());
}

void AttributeTemplates::Add(std::string attribute, std::string phrase) {
  if (phrases_.contains(attribute)) {
    throw Error(ErrorCode::kDuplicateId,
                "duplicate attribute '" + attribute + "'");
  }
  order_.push_back(attribute);
  phrases_.emplace(std::move(attribute), std::move(phrase));
}

std::optional<std::string> AttributeTemplates::Find(
    std::string_view attribute) const {
  auto it = phrases_.find(attribute);
  if (it == phrases_.end()) return std::nullopt;
  return it->second;
}

Caption AttributesToCaption(std::span<const std::string> attributes,
                            const AttributeTemplates& templates,
                            size_t max_words,
                            std::vector<std::string>* unknown) {
  if (attributes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no attributes to describe");
  }
  if (max_words == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_words must be >= 1");
  }
  std::string text;
  size_t words = 0;
  for (const std::string& attribute : attributes) {
    std::optional<std::string> phrase = templates.Find(attribute);
    if (!phrase) {
      if (unknown != nullptr) unknown->push_back(attribute);
      phrase = "has " + attribute;
    }
    const size_t phrase_words = SplitWords(*phrase).size();
    if (words + phrase_words > max_words) {
      if (words == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "phrase for '" + attribute + "' has " +
                        std::to_string(phrase_words) + " words, over the " +
                        std::to_string(max_words) + "-word limit");
      }
      break;
    }
    if (!text.empty()) text += ", ";
    text += *phrase;
    words += phrase_words;
  }
  return Caption{"", std::move(text)};
}

}  // namespace textaug
