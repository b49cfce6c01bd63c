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

#include "textaug/error.h"

namespace textaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kEmptyCaption:
      return "empty-caption";
    case ErrorCode::kLengthMismatch:
      return "length-mismatch";
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kZeroNorm:
      return "zero-norm";
    case ErrorCode::kDuplicateId:
      return "duplicate-id";
    case ErrorCode::kEmptyGallery:
      return "empty-gallery";
    case ErrorCode::kEmptyRanks:
      return "empty-ranks";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kMissingField:
      return "missing-field";
    case ErrorCode::kBadMagic:
      return "bad-magic";
    case ErrorCode::kTruncated:
      return "truncated";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace textaug
