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
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "textaug/error.h"
#include "textaug/random.h"

namespace textaug {
namespace {

using Values = std::vector<double>;

EmbeddingVector V(Values values) { return EmbeddingVector(std::move(values)); }

Values ToValues(const EmbeddingVector& v) {
  return Values(v.values().begin(), v.values().end());
}

Values RandomValues(Rng& rng, size_t dim) {
  Values out(dim);
  for (double& x : out) x = rng.UniformDouble() * 2.0 - 1.0;
  return out;
}

TEST(EmbeddingVectorTest, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(V({}), Error);
  EXPECT_THROW(V({1.0, std::numeric_limits<double>::quiet_NaN()}), Error);
  EXPECT_THROW(V({std::numeric_limits<double>::infinity()}), Error);
  EXPECT_EQ(V({1.0, 2.0}).dim(), 2u);
}

TEST(ProjectTest, Examples) {
  EXPECT_EQ(ToValues(Project(V({1, 2}), ProjectionMatrix::Identity(2))),
            (Values{1, 2}));
  EXPECT_EQ(ToValues(Project(V({1, 0, 0}),
                             ProjectionMatrix(2, 3, {0, 1, 0, 0, 0, 1}))),
            (Values{0, 0}));
  EXPECT_EQ(ToValues(Project(V({1, 1}), ProjectionMatrix(2, 2, {2, 0, 0, 3}))),
            (Values{2, 3}));
}

TEST(ProjectTest, DimensionMismatch) {
  try {
    Project(V({1, 2, 3}), ProjectionMatrix::Identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_THROW(ProjectionMatrix(2, 2, {1, 2, 3}), Error);
  EXPECT_THROW(ProjectionMatrix(0, 2, {}), Error);
}

TEST(ProjectPropertyTest, Linear) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t rows = rng.UniformInt(1, 6);
    const size_t cols = rng.UniformInt(1, 6);
    const ProjectionMatrix w(rows, cols, RandomValues(rng, rows * cols));
    const Values u = RandomValues(rng, cols);
    const Values v = RandomValues(rng, cols);
    const double a = rng.UniformDouble() * 4 - 2;
    const double b = rng.UniformDouble() * 4 - 2;
    Values combo(cols);
    for (size_t i = 0; i < cols; ++i) combo[i] = a * u[i] + b * v[i];
    const EmbeddingVector lhs = Project(V(combo), w);
    const EmbeddingVector pu = Project(V(u), w);
    const EmbeddingVector pv = Project(V(v), w);
    for (size_t r = 0; r < rows; ++r) {
      EXPECT_NEAR(lhs[r], a * pu[r] + b * pv[r], 1e-9);
    }
  }
}

TEST(AggregateTest, Examples) {
  const std::vector<EmbeddingVector> basis = {V({1, 0}), V({0, 1})};
  EXPECT_EQ(ToValues(Aggregate(basis, false)), (Values{1, 1}));
  const std::vector<EmbeddingVector> single = {V({3, 4})};
  const EmbeddingVector unit = Aggregate(single, true);
  EXPECT_DOUBLE_EQ(unit[0], 0.6);
  EXPECT_DOUBLE_EQ(unit[1], 0.8);
  const EmbeddingVector e = V({0.5, -2.0, 1.5});
  const std::vector<EmbeddingVector> repeated = {e, e, e};
  const EmbeddingVector got = Aggregate(repeated, true);
  const EmbeddingVector expected = L2Normalize(e);
  for (size_t i = 0; i < 3; ++i) EXPECT_NEAR(got[i], expected[i], 1e-15);
}

TEST(AggregateTest, Errors) {
  EXPECT_THROW(Aggregate({}, true), Error);
  const std::vector<EmbeddingVector> mixed = {V({1, 0}), V({1, 0, 0})};
  EXPECT_THROW(Aggregate(mixed, false), Error);
  const std::vector<EmbeddingVector> cancel = {V({1, -1}), V({-1, 1})};
  try {
    Aggregate(cancel, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroNorm);
  }
  EXPECT_EQ(ToValues(Aggregate(cancel, false)), (Values{0, 0}));
}

TEST(AggregatePropertyTest, PermutationInvariantAndUnitNorm) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t dim = rng.UniformInt(1, 32);
    const size_t count = rng.UniformInt(1, 12);
    std::vector<EmbeddingVector> vs;
    for (size_t i = 0; i < count; ++i) {
      Values values = RandomValues(rng, dim);
      // Wide magnitude spread stresses summation order.
      for (double& x : values) x *= std::pow(10.0, rng.UniformInt(0, 12));
      vs.push_back(V(values));
    }
    const EmbeddingVector base = Aggregate(vs, true);
    EXPECT_NEAR(std::sqrt(Dot(base.values(), base.values())), 1.0, 1e-6);
    const EmbeddingVector raw = Aggregate(vs, false);
    std::vector<EmbeddingVector> shuffled;
    for (const size_t i : rng.Permutation(count)) shuffled.push_back(vs[i]);
    EXPECT_EQ(Aggregate(shuffled, true), base);
    EXPECT_EQ(Aggregate(shuffled, false), raw);
  }
}

TEST(FuseTest, Examples) {
  EXPECT_EQ(ToValues(Fuse(V({1, 0}), V({0, 2}), true).vector()),
            (Values{1, 0, 0, 1}));
  EXPECT_EQ(ToValues(Fuse(V({1}), V({1}), false).vector()), (Values{1, 1}));
  const JointEmbedding text_only = Fuse(V({3, 4}), std::nullopt, true);
  EXPECT_EQ(ToValues(text_only.vector()), (Values{0.6, 0.8}));
  EXPECT_EQ(text_only.text_dim(), 2u);
  EXPECT_EQ(text_only.image_dim(), 0u);
}

TEST(FuseTest, Errors) {
  EXPECT_THROW(Fuse(std::nullopt, std::nullopt, true), Error);
  try {
    Fuse(V({0, 0}), V({1, 0}), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroNorm);
  }
  EXPECT_NO_THROW(Fuse(V({0, 0}), V({1, 0}), false));
  EXPECT_THROW(JointEmbedding(V({1, 2, 3}), 1, 1), Error);
}

TEST(FusePropertyTest, SplitRecoversNormalizedHalves) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const EmbeddingVector t = V(RandomValues(rng, rng.UniformInt(1, 16)));
    const EmbeddingVector i = V(RandomValues(rng, rng.UniformInt(1, 16)));
    const JointEmbedding j = Fuse(t, i, true);
    ASSERT_EQ(j.dim(), t.dim() + i.dim());
    const EmbeddingVector tn = L2Normalize(t);
    const EmbeddingVector in = L2Normalize(i);
    EXPECT_TRUE(std::equal(j.text_part().begin(), j.text_part().end(),
                           tn.values().begin(), tn.values().end()));
    EXPECT_TRUE(std::equal(j.image_part().begin(), j.image_part().end(),
                           in.values().begin(), in.values().end()));
    const JointEmbedding raw = Fuse(t, i, false);
    EXPECT_TRUE(std::equal(raw.text_part().begin(), raw.text_part().end(),
                           t.values().begin(), t.values().end()));
  }
}

TEST(EmbeddingVectorTest, FloatConversionRoundTrips) {
  const std::vector<float> f = {0.25f, -1.5f, 3.0e-8f};
  EXPECT_EQ(EmbeddingVector::FromFloats(f).ToFloats(), f);
}

}  // namespace
}  // namespace textaug
