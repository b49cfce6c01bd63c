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

#include "textaug/embedding.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "textaug/error.h"

namespace textaug {
namespace {

void CheckFinite(std::span<const double> values, const char* what) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " has a non-finite entry at index " +
                      std::to_string(i));
    }
  }
}

// Neumaier's compensated sum over `terms`, sorted first so that the result
// does not depend on input order.
double OrderFreeSum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  double compensation = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      compensation += (sum - next) + t;
    } else {
      compensation += (t - next) + sum;
    }
    sum = next;
  }
  return sum + compensation;
}

}  // namespace

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be >= 1");
  }
  CheckFinite(values_, "embedding");
}

EmbeddingVector EmbeddingVector::FromFloats(std::span<const float> values) {
  return EmbeddingVector(std::vector<double>(values.begin(), values.end()));
}

std::vector<float> EmbeddingVector::ToFloats() const {
  return std::vector<float>(values_.begin(), values_.end());
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double L2Norm(std::span<const double> v) { return std::sqrt(Dot(v, v)); }

EmbeddingVector L2Normalize(const EmbeddingVector& v) {
  const double norm = L2Norm(v.values());
  if (norm == 0.0) {
    throw Error(ErrorCode::kZeroNorm, "cannot normalize a zero vector");
  }
  std::vector<double> out(v.values().begin(), v.values().end());
  for (double& x : out) x /= norm;
  return EmbeddingVector(std::move(out));
}

ProjectionMatrix::ProjectionMatrix(size_t rows, size_t cols,
                                   std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection matrix needs rows >= 1 and cols >= 1");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "projection matrix has " + std::to_string(entries_.size()) +
                    " entries, expected " + std::to_string(rows_ * cols_));
  }
  CheckFinite(entries_, "projection matrix");
}

ProjectionMatrix ProjectionMatrix::Identity(size_t dim) {
  std::vector<double> entries(dim * dim, 0.0);
  for (size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return ProjectionMatrix(dim, dim, std::move(entries));
}

EmbeddingVector Project(const EmbeddingVector& v, const ProjectionMatrix& w) {
  if (w.cols() != v.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "projection expects dim " + std::to_string(w.cols()) +
                    ", got " + std::to_string(v.dim()));
  }
  std::vector<double> out(w.rows());
  const auto entries = w.entries();
  for (size_t r = 0; r < w.rows(); ++r) {
    out[r] = Dot(entries.subspan(r * w.cols(), w.cols()), v.values());
  }
  return EmbeddingVector(std::move(out));
}

EmbeddingVector Aggregate(std::span<const EmbeddingVector> variants,
                          bool normalize) {
  if (variants.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to aggregate");
  }
  const size_t dim = variants.front().dim();
  for (const EmbeddingVector& v : variants) {
    if (v.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "aggregate inputs have dims " + std::to_string(dim) +
                      " and " + std::to_string(v.dim()));
    }
  }
  std::vector<double> sum(dim);
  std::vector<double> terms(variants.size());
  for (size_t d = 0; d < dim; ++d) {
    for (size_t i = 0; i < variants.size(); ++i) terms[i] = variants[i][d];
    sum[d] = OrderFreeSum(terms);
  }
  EmbeddingVector out(std::move(sum));
  return normalize ? L2Normalize(out) : out;
}

JointEmbedding::JointEmbedding(EmbeddingVector values, size_t text_dim,
                               size_t image_dim)
    : values_(std::move(values)), text_dim_(text_dim), image_dim_(image_dim) {
  if (text_dim_ + image_dim_ != values_.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "joint embedding halves " + std::to_string(text_dim_) + " + " +
                    std::to_string(image_dim_) + " do not sum to " +
                    std::to_string(values_.dim()));
  }
}

JointEmbedding Fuse(const std::optional<EmbeddingVector>& text,
                    const std::optional<EmbeddingVector>& image,
                    bool normalize_halves) {
  if (!text && !image) {
    throw Error(ErrorCode::kInvalidArgument,
                "fusion needs a text or an image embedding");
  }
  std::vector<double> values;
  size_t text_dim = 0;
  size_t image_dim = 0;
  auto append = [&](const EmbeddingVector& v, const char* half) {
    if (!normalize_halves) {
      values.insert(values.end(), v.values().begin(), v.values().end());
      return;
    }
    if (L2Norm(v.values()) == 0.0) {
      throw Error(ErrorCode::kZeroNorm,
                  std::string("cannot normalize zero ") + half + " embedding");
    }
    const EmbeddingVector unit = L2Normalize(v);
    values.insert(values.end(), unit.values().begin(), unit.values().end());
  };
  if (text) {
    append(*text, "text");
    text_dim = text->dim();
  }
  if (image) {
    append(*image, "image");
    image_dim = image->dim();
  }
  return JointEmbedding(EmbeddingVector(std::move(values)), text_dim,
                        image_dim);
}

}  // namespace textaug
