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

#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.h"
#include "textaug/error.h"
#include "textaug/random.h"

namespace textaug {
namespace {

using Bits = std::vector<uint8_t>;

TEST(BinaryMaskTest, FromBitsValidates) {
  EXPECT_EQ(BinaryMask::FromBits({1, 0, 0, 1}).zero_run_start(), 1u);
  EXPECT_EQ(BinaryMask::FromBits({1, 0, 0, 1}).zero_run_length(), 2u);
  EXPECT_TRUE(BinaryMask::FromBits({1, 1}).is_identity());
  EXPECT_THROW(BinaryMask::FromBits({}), Error);
  EXPECT_THROW(BinaryMask::FromBits({0, 0}), Error);
  EXPECT_THROW(BinaryMask::FromBits({0, 1, 0}), Error);
  EXPECT_THROW(BinaryMask::FromBits({1, 2}), Error);
  EXPECT_THROW(BinaryMask::WithZeroRun(3, 2, 2), Error);
  EXPECT_EQ(BinaryMask::WithZeroRun(4, 1, 2).ToString(), "1001");
}

TEST(MaxZeroRunTest, FloorOfFractionCappedBelowLength) {
  EXPECT_EQ(MaxZeroRun(1, 0.5), 0u);
  EXPECT_EQ(MaxZeroRun(4, 0.5), 2u);
  EXPECT_EQ(MaxZeroRun(5, 0.5), 2u);
  EXPECT_EQ(MaxZeroRun(10, 0.3), 3u);
  EXPECT_EQ(MaxZeroRun(3, 0.2), 0u);
  // A fraction of 1 would mask everything; one segment must survive.
  EXPECT_EQ(MaxZeroRun(4, 1.0), 3u);
}

TEST(GenerateMaskTest, SingleSegmentIsIdentity) {
  Rng rng(1);
  for (double f : {0.1, 0.5, 1.0}) {
    EXPECT_EQ(GenerateMask(1, f, rng).bits(), Bits{1});
  }
}

TEST(GenerateMaskTest, CapZeroGivesIdentity) {
  Rng rng(1);
  EXPECT_TRUE(GenerateMask(3, 0.2, rng).is_identity());
}

TEST(GenerateMaskTest, FourSegmentsHalfFractionStaysInEnumeratedSet) {
  const auto valid = testutil::EnumerateMasks(4, 1, 2);
  ASSERT_EQ(valid.size(), 7u);
  const std::set<Bits> allowed(valid.begin(), valid.end());
  std::set<Bits> seen;
  Rng rng(2);
  for (int i = 0; i < 5000; ++i) {
    const Bits bits = GenerateMask(4, 0.5, rng).bits();
    ASSERT_TRUE(allowed.contains(bits));
    seen.insert(bits);
  }
  EXPECT_EQ(seen, allowed);
}

TEST(GenerateMaskTest, RunLengthUniformForTenSegments) {
  Rng rng(3);
  std::map<size_t, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++counts[GenerateMask(10, 0.3, rng).zero_run_length()];
  ASSERT_EQ(counts.size(), 3u);
  for (size_t len = 1; len <= 3; ++len) {
    EXPECT_NEAR(counts[len] / double(draws), 1.0 / 3.0, 0.02) << len;
  }
}

TEST(GenerateMaskTest, StartUniformGivenLength) {
  Rng rng(4);
  std::map<std::pair<size_t, size_t>, int> counts;
  std::map<size_t, int> per_length;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    const BinaryMask m = GenerateMask(6, 0.5, rng);
    ++counts[{m.zero_run_length(), m.zero_run_start()}];
    ++per_length[m.zero_run_length()];
  }
  for (const auto& [key, c] : counts) {
    const double expected = per_length[key.first] / double(6 - key.first + 1);
    EXPECT_NEAR(c, expected, 0.06 * expected);
  }
}

TEST(GenerateMaskPropertyTest, InvariantsAcrossGrid) {
  Rng rng(5);
  for (size_t n = 1; n <= 12; ++n) {
    for (double f : {0.05, 0.2, 0.34, 0.5, 0.75, 1.0}) {
      for (int i = 0; i < 300; ++i) {
        const BinaryMask m = GenerateMask(n, f, rng);
        ASSERT_EQ(m.size(), n);
        size_t kept = 0, runs = 0;
        for (size_t j = 0; j < n; ++j) {
          kept += m.keep(j);
          if (!m.keep(j) && (j == 0 || m.keep(j - 1))) ++runs;
        }
        ASSERT_GE(kept, 1u);
        ASSERT_LE(runs, 1u);
        ASSERT_LE(n - kept, static_cast<size_t>(f * n + 1e-9));
        ASSERT_TRUE(MaskRespectsCap(m, f));
      }
    }
  }
}

}  // namespace
}  // namespace textaug
