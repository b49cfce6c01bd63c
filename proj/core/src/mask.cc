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

#include "textaug/mask.h"

#include <cmath>
#include <utility>

#include "textaug/error.h"

namespace textaug {

BinaryMask BinaryMask::FromBits(std::vector<uint8_t> bits) {
  if (bits.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mask must have length >= 1");
  }
  size_t zero_start = 0;
  size_t zero_length = 0;
  size_t runs = 0;
  bool in_run = false;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw Error(ErrorCode::kInvalidArgument, "mask bits must be 0 or 1");
    }
    if (bits[i] == 0) {
      if (!in_run) {
        ++runs;
        zero_start = i;
        in_run = true;
      }
      ++zero_length;
    } else {
      in_run = false;
    }
  }
  if (runs > 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask zero bits must form one contiguous run");
  }
  if (zero_length == bits.size()) {
    throw Error(ErrorCode::kInvalidArgument, "mask must keep at least one segment");
  }
  return BinaryMask(std::move(bits), zero_start, zero_length);
}

BinaryMask BinaryMask::Identity(size_t n) {
  return FromBits(std::vector<uint8_t>(n, 1));
}

BinaryMask BinaryMask::WithZeroRun(size_t n, size_t start, size_t length) {
  if (start + length > n) {
    throw Error(ErrorCode::kInvalidArgument, "zero-run exceeds mask length");
  }
  std::vector<uint8_t> bits(n, 1);
  for (size_t i = start; i < start + length; ++i) bits[i] = 0;
  return FromBits(std::move(bits));
}

std::string BinaryMask::ToString() const {
  std::string out;
  for (uint8_t bit : bits_) out.push_back(bit ? '1' : '0');
  return out;
}

size_t MaxZeroRun(size_t n, double max_mask_fraction) {
  if (n == 0) return 0;
  // The epsilon absorbs products like 0.3 * 10 landing just under 3.
  const double scaled = max_mask_fraction * static_cast<double>(n) + 1e-9;
  size_t cap = scaled <= 0.0 ? 0 : static_cast<size_t>(std::floor(scaled));
  if (cap > n - 1) cap = n - 1;
  return cap;
}

bool MaskRespectsCap(const BinaryMask& mask, double max_mask_fraction) {
  return mask.zero_run_length() <= MaxZeroRun(mask.size(), max_mask_fraction);
}

BinaryMask GenerateMask(size_t n, double max_mask_fraction, Rng& rng) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "mask length must be >= 1");
  }
  const size_t cap = MaxZeroRun(n, max_mask_fraction);
  if (cap == 0) return BinaryMask::Identity(n);
  const size_t length = rng.UniformInt(1, cap);
  const size_t start = rng.UniformInt(0, n - length);
  return BinaryMask::WithZeroRun(n, start, length);
}

}  // namespace textaug
