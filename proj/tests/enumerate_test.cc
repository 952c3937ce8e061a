// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indsys/enumerate.h"

#include <set>

#include <gtest/gtest.h>

#include "indsys/errors.h"

namespace indsys {
namespace {

std::int64_t SmallBinom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

TEST(EnumerateLevelTest, ThreeThreeOnFour) {
  const GroundSet g(4);
  const auto all = EnumerateLevel(g, 3, 3);
  EXPECT_EQ(all.size(), 16u);
}

TEST(EnumerateLevelTest, ZeroLevelIsJustTheEmptySet) {
  const GroundSet g(4);
  const auto all = EnumerateLevel(g, 0, 0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
}

TEST(EnumerateLevelTest, FourFourOnSixDistinctAndAtLevel) {
  const GroundSet g(6);
  const auto all = EnumerateLevel(g, 4, 4);
  EXPECT_EQ(all.size(), 225u);
  const std::set<Subset> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), 225u);
  for (const Subset& x : all) EXPECT_EQ(x.level(), (Level{4, 4}));
}

TEST(EnumerateLevelTest, CountMatchesBinomialProductForAllSmallLevels) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    const GroundSet g(m);
    for (std::int64_t y1 = 0; y1 <= m; ++y1) {
      for (std::int64_t y2 = 0; y2 <= m; ++y2) {
        LevelEnumerator it(g, y1, y2);
        Subset x(g);
        std::int64_t count = 0;
        std::optional<Subset> prev;
        while (it.Next(x)) {
          ++count;
          ASSERT_EQ(x.level(), (Level{y1, y2}));
          if (prev) ASSERT_LT(*prev, x) << "order must be strictly increasing";
          prev = x;
        }
        EXPECT_EQ(count, SmallBinom(m, y1) * SmallBinom(m, y2))
            << "m=" << m << " level " << y1 << "," << y2;
        EXPECT_EQ(it.count(), count);
        EXPECT_FALSE(it.Next(x));
      }
    }
  }
}

TEST(EnumerateLevelTest, FirstMemberIsLowestIndices) {
  const GroundSet g(6);
  const auto all = EnumerateLevel(g, 4, 4);
  EXPECT_EQ(all.front(), Subset::FromElements(g, {1, 2, 3, 4, 7, 8, 9, 10}));
  EXPECT_EQ(all.back(), Subset::FromElements(g, {3, 4, 5, 6, 9, 10, 11, 12}));
}

TEST(EnumerateLevelTest, BudgetExceededNamesTheCount) {
  const GroundSet g(10);
  try {
    LevelEnumerator it(g, 5, 5, 1000);
    FAIL() << "expected EnumerationTooLargeError";
  } catch (const EnumerationTooLargeError& e) {
    EXPECT_NE(std::string(e.what()).find("63504"), std::string::npos)
        << e.what();
  }
  EXPECT_NO_THROW(LevelEnumerator(g, 5, 5, 63504));
}

TEST(EnumerateLevelTest, PaperScaleBudgetUsesLog2Count) {
  const GroundSet g(8 * 1024 * 1024);
  EXPECT_THROW(LevelEnumerator(g, 8192, 8192), EnumerationTooLargeError);
  LevelEnumerator small(g, 0, 1);
  EXPECT_EQ(small.count(), 8 * 1024 * 1024);
}

TEST(EnumerateLevelTest, RejectsLevelOutsideRange) {
  EXPECT_THROW(LevelEnumerator(GroundSet(3), 4, 0), LevelError);
  EXPECT_THROW(LevelEnumerator(GroundSet(3), 0, -1), LevelError);
}

TEST(ForEachSubsetTest, PowerSetInOrder) {
  const GroundSet g(2);
  std::vector<std::uint64_t> masks;
  ForEachSubset(g, [&](const Subset& x) { masks.push_back(x.mask()); });
  ASSERT_EQ(masks.size(), 16u);
  for (std::uint64_t i = 0; i < 16; ++i) EXPECT_EQ(masks[i], i);
  EXPECT_THROW(ForEachSubset(GroundSet(20), [](const Subset&) {}, 1000),
               EnumerationTooLargeError);
}

TEST(ForEachSubsetTest, SubsetsOfASet) {
  const GroundSet g(3);
  const Subset x = Subset::FromElements(g, {2, 4, 6});
  std::vector<Subset> seen;
  ForEachSubsetOf(x, [&](const Subset& s) { seen.push_back(s); });
  ASSERT_EQ(seen.size(), 8u);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    EXPECT_TRUE(seen[i].IsSubsetOf(x));
    if (i > 0) EXPECT_LT(seen[i - 1], seen[i]);
  }
}

}  // namespace
}  // namespace indsys
