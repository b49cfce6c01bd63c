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

#include "textaug/random.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

namespace textaug {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(5), b(5), c(6);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs = differs || x != c.Next();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, UniformIntStaysInRangeAndCoversIt) {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const uint64_t v = rng.UniformInt(3, 9);
    ASSERT_GE(v, 3u);
    ASSERT_LE(v, 9u);
    ++counts[v - 3];
  }
  // Binomial sd is about 90; allow 5 sd.
  for (int c : counts) EXPECT_NEAR(c, 10000, 450);
  EXPECT_EQ(rng.UniformInt(4, 4), 4u);
}

TEST(RngTest, UniformDoubleInUnitInterval) {
  Rng rng(2);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.UniformDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(RngTest, PermutationIsUniformOverThreeElements) {
  Rng rng(3);
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> base = {0, 1, 2};
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::vector<int> counts(perms.size(), 0);
  for (int i = 0; i < 60000; ++i) {
    const std::vector<size_t> p = rng.Permutation(3);
    const auto it = std::find(perms.begin(), perms.end(), p);
    ASSERT_NE(it, perms.end());
    ++counts[it - perms.begin()];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 450);
}

TEST(RngTest, HashBytesDependsOnSalt) {
  EXPECT_EQ(HashBytes("coat", 1), HashBytes("coat", 1));
  EXPECT_NE(HashBytes("coat", 1), HashBytes("coat", 2));
  EXPECT_NE(HashBytes("coat", 1), HashBytes("boat", 1));
}

}  // namespace
}  // namespace textaug
