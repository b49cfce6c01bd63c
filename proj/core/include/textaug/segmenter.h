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

#ifndef TEXTAUG_SEGMENTER_H_
#define TEXTAUG_SEGMENTER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace textaug {

// A textual description with an opaque identifier. Valid captions contain at
// least one word (maximal run of non-whitespace characters).
struct Caption {
  std::string id;
  std::string text;

  friend bool operator==(const Caption&, const Caption&) = default;
};

// Splits on ASCII whitespace. Multi-byte UTF-8 sequences never contain
// whitespace bytes, so this is safe on UTF-8 input.
std::vector<std::string> SplitWords(std::string_view text);

// Joins with single spaces.
std::string JoinWords(const std::vector<std::string>& words);

// Throws kEmptyCaption if `caption.text` has no word.
void ValidateCaption(const Caption& caption);

struct SegmentationStrategy {
  enum class Kind { kPunctuation, kFixedWindow };

  Kind kind = Kind::kPunctuation;
  // Words per segment for kFixedWindow, and for the kPunctuation fallback
  // when the text has no internal boundary.
  size_t window = 3;

  static SegmentationStrategy Punctuation(size_t window = 3) {
    return {Kind::kPunctuation, window};
  }
  static SegmentationStrategy FixedWindow(size_t window = 3) {
    return {Kind::kFixedWindow, window};
  }

  friend bool operator==(const SegmentationStrategy&,
                         const SegmentationStrategy&) = default;
};

std::string_view StrategyName(SegmentationStrategy::Kind kind);
// Accepts "punctuation" and "fixed-window". Throws kInvalidArgument.
SegmentationStrategy::Kind ParseStrategyKind(std::string_view name);

// A nonempty contiguous run of words.
struct Segment {
  std::vector<std::string> words;

  std::string Text() const { return JoinWords(words); }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// A caption split into ordered sub-sentences. Joining the segment texts with
// single spaces reproduces NormalizeText(source.text, strategy).
class SegmentedCaption {
 public:
  // Builds directly from segment texts; each must contain at least one word.
  static SegmentedCaption FromSegments(std::string id,
                                       const std::vector<std::string>& texts);

  const Caption& source() const { return source_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const SegmentationStrategy& strategy() const { return strategy_; }
  size_t size() const { return segments_.size(); }

  std::vector<std::string> SegmentTexts() const;
  std::string JoinedText() const;

 private:
  friend SegmentedCaption SegmentCaption(const Caption&,
                                         const SegmentationStrategy&);

  SegmentedCaption(Caption source, std::vector<Segment> segments,
                   SegmentationStrategy strategy);

  Caption source_;
  std::vector<Segment> segments_;
  SegmentationStrategy strategy_;
};

// The canonical text a segmentation round-trips to. For kFixedWindow this is
// the whitespace-normalized text. For kPunctuation the boundary marks
// (',', ';', '.') trailing a word are delimiters and are dropped.
std::string NormalizeText(std::string_view text,
                          const SegmentationStrategy& strategy);

// Deterministic. Punctuation strategy splits after any word ending in ',',
// ';' or '.'; if that yields a single segment the text is cut into windows
// instead. Throws kEmptyCaption for all-whitespace text and kInvalidArgument
// for window == 0.
SegmentedCaption SegmentCaption(const Caption& caption,
                                const SegmentationStrategy& strategy);

}  // namespace textaug

#endif  // TEXTAUG_SEGMENTER_H_
