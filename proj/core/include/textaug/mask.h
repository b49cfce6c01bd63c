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

#ifndef TEXTAUG_MASK_H_
#define TEXTAUG_MASK_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "textaug/random.h"

namespace textaug {

// Per-segment keep (1) / replace (0) bits. Construction enforces that at
// least one bit is kept and that the zero bits form at most one contiguous
// run. The length cap depends on the augmentation config and is checked by
// MaskRespectsCap().
class BinaryMask {
 public:
  // Throws kInvalidArgument if bits are empty, not all 0/1, all zero, or
  // contain more than one zero-run.
  static BinaryMask FromBits(std::vector<uint8_t> bits);
  static BinaryMask Identity(size_t n);
  // Zeros in [start, start + length). Same validation as FromBits.
  static BinaryMask WithZeroRun(size_t n, size_t start, size_t length);

  const std::vector<uint8_t>& bits() const { return bits_; }
  size_t size() const { return bits_.size(); }
  bool keep(size_t i) const { return bits_[i] != 0; }

  size_t zero_run_start() const { return zero_start_; }
  size_t zero_run_length() const { return zero_length_; }
  bool is_identity() const { return zero_length_ == 0; }

  std::string ToString() const;

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.bits_ == b.bits_;
  }

 private:
  BinaryMask(std::vector<uint8_t> bits, size_t zero_start, size_t zero_length)
      : bits_(std::move(bits)),
        zero_start_(zero_start),
        zero_length_(zero_length) {}

  std::vector<uint8_t> bits_;
  size_t zero_start_;
  size_t zero_length_;
};

// Largest zero-run allowed for n segments: floor(max_mask_fraction * n),
// further capped at n - 1 so at least one segment survives.
size_t MaxZeroRun(size_t n, double max_mask_fraction);

bool MaskRespectsCap(const BinaryMask& mask, double max_mask_fraction);

// Draws the zero-run length uniformly from {1, ..., MaxZeroRun(n, f)} and
// then its start uniformly from {0, ..., n - length}. Returns the identity
// mask when the cap is zero.
BinaryMask GenerateMask(size_t n, double max_mask_fraction, Rng& rng);

}  // namespace textaug

#endif  // TEXTAUG_MASK_H_
