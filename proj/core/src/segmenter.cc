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

#include "textaug/segmenter.h"

#include <string>
#include <utility>

#include "textaug/error.h"

namespace textaug {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsBoundaryMark(char c) { return c == ',' || c == ';' || c == '.'; }

// A word after boundary-mark stripping, plus whether it closed a segment.
struct Token {
  std::string word;  // may be empty for a standalone mark such as ","
  bool closes_segment = false;
};

std::vector<Token> PunctuationTokens(std::string_view text) {
  std::vector<Token> tokens;
  for (std::string& word : SplitWords(text)) {
    Token token;
    size_t end = word.size();
    while (end > 0 && IsBoundaryMark(word[end - 1])) --end;
    token.closes_segment = end < word.size();
    word.resize(end);
    token.word = std::move(word);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<Segment> Windows(std::vector<std::string> words, size_t window) {
  std::vector<Segment> segments;
  for (size_t i = 0; i < words.size(); i += window) {
    Segment segment;
    for (size_t j = i; j < words.size() && j < i + window; ++j) {
      segment.words.push_back(std::move(words[j]));
    }
    segments.push_back(std::move(segment));
  }
  return segments;
}

}  // namespace

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& word : words) {
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

void ValidateCaption(const Caption& caption) {
  if (SplitWords(caption.text).empty()) {
    throw Error(ErrorCode::kEmptyCaption,
                "caption '" + caption.id + "' has no words");
  }
}

std::string_view StrategyName(SegmentationStrategy::Kind kind) {
  switch (kind) {
    case SegmentationStrategy::Kind::kPunctuation:
      return "punctuation";
    case SegmentationStrategy::Kind::kFixedWindow:
      return "fixed-window";
  }
  return "unknown";
}

SegmentationStrategy::Kind ParseStrategyKind(std::string_view name) {
  if (name == "punctuation") return SegmentationStrategy::Kind::kPunctuation;
  if (name == "fixed-window") return SegmentationStrategy::Kind::kFixedWindow;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown segmentation strategy '" + std::string(name) +
                  "' (expected punctuation or fixed-window)");
}

SegmentedCaption::SegmentedCaption(Caption source,
                                   std::vector<Segment> segments,
                                   SegmentationStrategy strategy)
    : source_(std::move(source)),
      segments_(std::move(segments)),
      strategy_(strategy) {}

SegmentedCaption SegmentedCaption::FromSegments(
    std::string id, const std::vector<std::string>& texts) {
  if (texts.empty()) {
    throw Error(ErrorCode::kEmptyCaption, "caption '" + id + "' has no segments");
  }
  std::vector<Segment> segments;
  segments.reserve(texts.size());
  for (const std::string& text : texts) {
    Segment segment{SplitWords(text)};
    if (segment.words.empty()) {
      throw Error(ErrorCode::kEmptyCaption,
                  "caption '" + id + "' has an empty segment");
    }
    segments.push_back(std::move(segment));
  }
  SegmentedCaption out(Caption{std::move(id), ""}, std::move(segments),
                       SegmentationStrategy::FixedWindow());
  out.source_.text = out.JoinedText();
  return out;
}

std::vector<std::string> SegmentedCaption::SegmentTexts() const {
  std::vector<std::string> texts;
  texts.reserve(segments_.size());
  for (const Segment& segment : segments_) texts.push_back(segment.Text());
  return texts;
}

std::string SegmentedCaption::JoinedText() const {
  return JoinWords(SegmentTexts());
}

std::string NormalizeText(std::string_view text,
                          const SegmentationStrategy& strategy) {
  if (strategy.kind == SegmentationStrategy::Kind::kFixedWindow) {
    return JoinWords(SplitWords(text));
  }
  std::vector<std::string> words;
  for (Token& token : PunctuationTokens(text)) {
    if (!token.word.empty()) words.push_back(std::move(token.word));
  }
  return JoinWords(words);
}

SegmentedCaption SegmentCaption(const Caption& caption,
                                const SegmentationStrategy& strategy) {
  if (strategy.window == 0) {
    throw Error(ErrorCode::kInvalidArgument, "segment window must be >= 1");
  }
  ValidateCaption(caption);

  if (strategy.kind == SegmentationStrategy::Kind::kFixedWindow) {
    return SegmentedCaption(caption, Windows(SplitWords(caption.text),
                                             strategy.window),
                            strategy);
  }

  std::vector<Segment> segments;
  std::vector<std::string> all_words;
  Segment current;
  for (Token& token : PunctuationTokens(caption.text)) {
    if (!token.word.empty()) {
      all_words.push_back(token.word);
      current.words.push_back(std::move(token.word));
    }
    if (token.closes_segment && !current.words.empty()) {
      segments.push_back(std::move(current));
      current = Segment{};
    }
  }
  if (!current.words.empty()) segments.push_back(std::move(current));

  if (all_words.empty()) {
    throw Error(ErrorCode::kEmptyCaption,
                "caption '" + caption.id + "' has only punctuation");
  }
  if (segments.size() <= 1) {
    segments = Windows(std::move(all_words), strategy.window);
  }
  return SegmentedCaption(caption, std::move(segments), strategy);
}

}  // namespace textaug
