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

#ifndef TEXTAUG_RANDOM_H_
#define TEXTAUG_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace textaug {

// One step of the SplitMix64 finalizer. Used for seed derivation and hashing.
uint64_t Mix64(uint64_t x);

// FNV-1a over raw bytes, then finalized with Mix64 under `salt`.
uint64_t HashBytes(std::string_view bytes, uint64_t salt);

// Seeded random stream. The engine is std::mt19937_64, which is fully
// specified by the standard; the distributions are implemented here because
// the std:: ones are implementation-defined and would make outputs differ
// between standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t Next() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  uint64_t UniformInt(uint64_t lo, uint64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

  bool Bernoulli(double p) { return UniformDouble() < p; }

  // Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<size_t> Permutation(size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace textaug

#endif  // TEXTAUG_RANDOM_H_
