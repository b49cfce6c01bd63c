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

// Synthetic re-identification corpora for tests and benchmarks.

#ifndef TEXTAUG_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
#define TEXTAUG_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "textaug/dataset.h"

namespace textaug::testutil {

struct CorpusOptions {
  size_t identities = 50;
  size_t entries_per_identity = 4;
  size_t min_distractors = 2;
  size_t max_distractors = 4;
  uint64_t seed = 0;
};

// Each caption is one identity-specific core phrase plus distractor phrases
// drawn from a pool shared by all identities, comma-separated in random
// order. Core phrases reuse a small vocabulary, so identities overlap.
std::vector<ManifestRecord> MakeCorpus(const CorpusOptions& options);

// Writes records as manifest JSONL.
void WriteManifest(const std::string& path,
                   const std::vector<ManifestRecord>& records);

}  // namespace textaug::testutil

#endif  // TEXTAUG_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
