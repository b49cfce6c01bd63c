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

// Test-time text augmentation over caption segments.
//
// CutOut keeps the segments whose mask bit is 1. CutMix keeps those segments
// and fills every masked position i with segment i of a shuffled copy of the
// same caption. CutMixOut picks CutMix with probability p_mix and CutOut
// otherwise, independently for each variant, with a fresh mask per variant.

#ifndef TEXTAUG_AUGMENT_H_
#define TEXTAUG_AUGMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/mask.h"
#include "textaug/random.h"
#include "textaug/segmenter.h"

namespace textaug {

enum class CutoutPolicy {
  kDelete,        // drop masked segments
  kSpecialToken,  // replace each masked run with one special token
};

std::string_view CutoutPolicyName(CutoutPolicy policy);
CutoutPolicy ParseCutoutPolicy(std::string_view name);

struct AugmentationConfig {
  double p_mix = 0.5;
  double p_out = 0.5;
  size_t k = 8;
  double max_mask_fraction = 0.5;
  CutoutPolicy cutout_policy = CutoutPolicy::kDelete;
  std::string special_token = "[MASK]";
  SegmentationStrategy strategy;
  uint64_t seed = 0;

  // Sets p_mix and p_out = 1 - p_mix together.
  AugmentationConfig& WithMixProbability(double p) {
    p_mix = p;
    p_out = 1.0 - p;
    return *this;
  }

  // Throws kInvalidArgument on any broken invariant.
  void Validate() const;
};

enum class AugmentOp { kOriginal, kCutMix, kCutOut };

std::string_view AugmentOpName(AugmentOp op);

struct Variant {
  Caption caption;
  std::string parent_id;
  // 1-based for augmented variants; 0 is reserved for the original caption.
  size_t index = 0;
  AugmentOp op = AugmentOp::kOriginal;

  friend bool operator==(const Variant&, const Variant&) = default;
};

// Output id is "<source id>#cutout". Throws kLengthMismatch if the mask
// length differs from the segment count.
Caption Cutout(const SegmentedCaption& seg, const BinaryMask& mask,
               CutoutPolicy policy = CutoutPolicy::kDelete,
               std::string_view special_token = "[MASK]");

// CutMix against an explicit shuffled order: position i holds segment i
// where the mask keeps it and segment shuffled_order[i] otherwise.
// `shuffled_order` must be a permutation of {0, ..., n-1}. Output id is
// "<source id>#cutmix".
Caption CutMix(const SegmentedCaption& seg, const BinaryMask& mask,
               std::span<const size_t> shuffled_order);

// Draws a uniform segment permutation from `rng`.
Caption CutMix(const SegmentedCaption& seg, const BinaryMask& mask, Rng& rng);

// The stream a caption's variants are drawn from. Depends only on the seed
// and the caption id, so each caption in a batch gets its own stream.
Rng VariantStream(const Caption& caption, uint64_t seed);

// Exactly cfg.k variants, indices 1..k, ids "<caption id>#<index>". Pure
// function of (caption, cfg).
std::vector<Variant> CutMixOut(const Caption& caption,
                               const AugmentationConfig& cfg);

// Variant 0 (the unmodified caption) followed by CutMixOut(caption, cfg).
std::vector<Variant> AugmentWithOriginal(const Caption& caption,
                                         const AugmentationConfig& cfg);

}  // namespace textaug

#endif  // TEXTAUG_AUGMENT_H_
