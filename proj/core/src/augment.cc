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

#include "textaug/augment.h"

#include <cmath>
#include <string>
#include <utility>

#include "textaug/error.h"

namespace textaug {
namespace {

void CheckMaskLength(const SegmentedCaption& seg, const BinaryMask& mask) {
  if (mask.size() != seg.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "mask length " + std::to_string(mask.size()) +
                    " does not match segment count " +
                    std::to_string(seg.size()));
  }
}

void Append(std::string& out, const std::string& piece) {
  if (!out.empty()) out.push_back(' ');
  out += piece;
}

}  // namespace

std::string_view CutoutPolicyName(CutoutPolicy policy) {
  switch (policy) {
    case CutoutPolicy::kDelete:
      return "delete";
    case CutoutPolicy::kSpecialToken:
      return "special-token";
  }
  return "unknown";
}

CutoutPolicy ParseCutoutPolicy(std::string_view name) {
  if (name == "delete") return CutoutPolicy::kDelete;
  if (name == "special-token") return CutoutPolicy::kSpecialToken;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown cutout policy '" + std::string(name) +
                  "' (expected delete or special-token)");
}

std::string_view AugmentOpName(AugmentOp op) {
  switch (op) {
    case AugmentOp::kOriginal:
      return "original";
    case AugmentOp::kCutMix:
      return "cutmix";
    case AugmentOp::kCutOut:
      return "cutout";
  }
  return "unknown";
}

void AugmentationConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (!(p_mix >= 0.0 && p_mix <= 1.0)) fail("p_mix must lie in [0, 1]");
  if (!(p_out >= 0.0 && p_out <= 1.0)) fail("p_out must lie in [0, 1]");
  if (std::abs(p_mix + p_out - 1.0) > 1e-9) fail("p_mix + p_out must equal 1");
  if (k < 1) fail("k must be >= 1");
  if (!(max_mask_fraction > 0.0 && max_mask_fraction <= 1.0)) {
    fail("max_mask_fraction must lie in (0, 1]");
  }
  if (strategy.window < 1) fail("segment window must be >= 1");
  if (cutout_policy == CutoutPolicy::kSpecialToken &&
      SplitWords(special_token).empty()) {
    fail("special token must contain a word");
  }
}

Caption Cutout(const SegmentedCaption& seg, const BinaryMask& mask,
               CutoutPolicy policy, std::string_view special_token) {
  CheckMaskLength(seg, mask);
  std::string text;
  const auto& segments = seg.segments();
  for (size_t i = 0; i < segments.size(); ++i) {
    if (mask.keep(i)) {
      Append(text, segments[i].Text());
    } else if (policy == CutoutPolicy::kSpecialToken &&
               (i == 0 || mask.keep(i - 1))) {
      Append(text, std::string(special_token));
    }
  }
  return Caption{seg.source().id + "#cutout", std::move(text)};
}

Caption CutMix(const SegmentedCaption& seg, const BinaryMask& mask,
               std::span<const size_t> shuffled_order) {
  CheckMaskLength(seg, mask);
  const size_t n = seg.size();
  if (shuffled_order.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "shuffled order length " +
                    std::to_string(shuffled_order.size()) +
                    " does not match segment count " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (size_t j : shuffled_order) {
    if (j >= n || seen[j]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "shuffled order is not a permutation");
    }
    seen[j] = true;
  }
  const auto& segments = seg.segments();
  std::string text;
  for (size_t i = 0; i < n; ++i) {
    Append(text, segments[mask.keep(i) ? i : shuffled_order[i]].Text());
  }
  return Caption{seg.source().id + "#cutmix", std::move(text)};
}

Caption CutMix(const SegmentedCaption& seg, const BinaryMask& mask, Rng& rng) {
  CheckMaskLength(seg, mask);
  const std::vector<size_t> order = rng.Permutation(seg.size());
  return CutMix(seg, mask, order);
}

Rng VariantStream(const Caption& caption, uint64_t seed) {
  return Rng(Mix64(seed) ^ HashBytes(caption.id, 0x7465787461756755ULL));
}

std::vector<Variant> CutMixOut(const Caption& caption,
                               const AugmentationConfig& cfg) {
  cfg.Validate();
  const SegmentedCaption seg = SegmentCaption(caption, cfg.strategy);
  Rng rng = VariantStream(caption, cfg.seed);

  std::vector<Variant> variants;
  variants.reserve(cfg.k);
  for (size_t index = 1; index <= cfg.k; ++index) {
    // Draw order per variant: operation, mask, then (CutMix only) shuffle.
    const bool mix = rng.Bernoulli(cfg.p_mix);
    const BinaryMask mask =
        GenerateMask(seg.size(), cfg.max_mask_fraction, rng);
    Variant variant;
    variant.parent_id = caption.id;
    variant.index = index;
    if (mix) {
      variant.op = AugmentOp::kCutMix;
      variant.caption = CutMix(seg, mask, rng);
    } else {
      variant.op = AugmentOp::kCutOut;
      variant.caption = Cutout(seg, mask, cfg.cutout_policy, cfg.special_token);
    }
    variant.caption.id = caption.id + "#" + std::to_string(index);
    variants.push_back(std::move(variant));
  }
  return variants;
}

std::vector<Variant> AugmentWithOriginal(const Caption& caption,
                                         const AugmentationConfig& cfg) {
  std::vector<Variant> out;
  out.reserve(cfg.k + 1);
  out.push_back(Variant{Caption{caption.id + "#0", caption.text}, caption.id,
                        0, AugmentOp::kOriginal});
  for (Variant& v : CutMixOut(caption, cfg)) out.push_back(std::move(v));
  return out;
}

}  // namespace textaug
