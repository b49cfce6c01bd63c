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

#ifndef TEXTAUG_EMBEDDING_H_
#define TEXTAUG_EMBEDDING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace textaug {

// Fixed-dimension vector of finite doubles, dim >= 1.
class EmbeddingVector {
 public:
  // Throws kInvalidArgument on empty input or a non-finite entry.
  explicit EmbeddingVector(std::vector<double> values);
  static EmbeddingVector FromFloats(std::span<const float> values);

  size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](size_t i) const { return values_[i]; }

  std::vector<float> ToFloats() const;

  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double L2Norm(std::span<const double> v);

// Throws kZeroNorm for the zero vector.
EmbeddingVector L2Normalize(const EmbeddingVector& v);

// Row-major rows x cols matrix of finite entries.
class ProjectionMatrix {
 public:
  ProjectionMatrix(size_t rows, size_t cols, std::vector<double> entries);
  static ProjectionMatrix Identity(size_t dim);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const double> entries() const { return entries_; }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<double> entries_;
};

// W v. Throws kDimensionMismatch unless W.cols() == v.dim().
EmbeddingVector Project(const EmbeddingVector& v, const ProjectionMatrix& w);

// Element-wise sum of the variant embeddings, L2-normalized when `normalize`.
// Each coordinate is summed in sorted order with compensation, so the result
// is bit-identical under any permutation of the inputs.
// Throws kInvalidArgument on empty input, kDimensionMismatch on mixed dims and
// kZeroNorm if the sum vanishes under normalization.
EmbeddingVector Aggregate(std::span<const EmbeddingVector> variants,
                          bool normalize = true);

// [text; image] with the split point recorded. Either half may be absent
// (dimension 0), but not both.
class JointEmbedding {
 public:
  JointEmbedding(EmbeddingVector values, size_t text_dim, size_t image_dim);

  const EmbeddingVector& vector() const { return values_; }
  size_t dim() const { return values_.dim(); }
  size_t text_dim() const { return text_dim_; }
  size_t image_dim() const { return image_dim_; }

  std::span<const double> text_part() const {
    return values_.values().subspan(0, text_dim_);
  }
  std::span<const double> image_part() const {
    return values_.values().subspan(text_dim_, image_dim_);
  }

 private:
  EmbeddingVector values_;
  size_t text_dim_;
  size_t image_dim_;
};

// Concatenates text first. With `normalize_halves` each present half is
// L2-normalized independently (kZeroNorm if a half is zero).
JointEmbedding Fuse(const std::optional<EmbeddingVector>& text,
                    const std::optional<EmbeddingVector>& image,
                    bool normalize_halves = true);

inline JointEmbedding Fuse(const EmbeddingVector& text,
                           const EmbeddingVector& image,
                           bool normalize_halves = true) {
  return Fuse(std::optional<EmbeddingVector>(text),
              std::optional<EmbeddingVector>(image), normalize_halves);
}

}  // namespace textaug

#endif  // TEXTAUG_EMBEDDING_H_
