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

#include "indsys/objective.h"

#include <set>

#include <gtest/gtest.h>

#include "indsys/random.h"
#include "test_util.h"

namespace indsys {
namespace {

TEST(EvalFTest, KnownValues) {
  const Params p = MakeToyParams(4, 1, 2);
  EXPECT_EQ(EvalF(p, {2, 2}), -2);
  EXPECT_EQ(EvalF(p, {3, 3}), -3);
  EXPECT_EQ(EvalF(p, {3, 2}), -1);
  EXPECT_EQ(EvalF(p, {2, 3}), -4);
  EXPECT_TRUE(InObjectiveBox(p, {2, 3}));
}

TEST(EvalFTest, ZeroOutsideTheBox) {
  const Params p = MakeToyParams(6, 2, 3);
  for (std::int64_t y1 = 0; y1 <= 6; ++y1) {
    for (std::int64_t y2 = 0; y2 <= 6; ++y2) {
      const bool inside = y1 >= 3 && y1 <= 5 && y2 >= 3 && y2 <= 5;
      EXPECT_EQ(InObjectiveBox(p, {y1, y2}), inside);
      if (!inside) EXPECT_EQ(EvalF(p, {y1, y2}), 0);
      if (inside) EXPECT_LT(EvalF(p, {y1, y2}), 0);
    }
  }
}

TEST(EvalFTest, BoxValuesAreMinusOneToMinusLSquared) {
  for (std::int64_t l = 1; l <= 4; ++l) {
    const Params p = MakeToyParams(2 + l, 2, l);
    std::set<std::int64_t> values;
    for (std::int64_t y1 = p.k() + 1; y1 <= p.k() + l; ++y1) {
      for (std::int64_t y2 = p.k() + 1; y2 <= p.k() + l; ++y2) {
        values.insert(EvalF(p, {y1, y2}));
      }
    }
    std::set<std::int64_t> expected;
    for (std::int64_t v = 1; v <= l * l; ++v) expected.insert(-v);
    EXPECT_EQ(values, expected) << "l=" << l;
  }
}

TEST(ApplyWTest, MatchesDenseMatrixProduct) {
  Rng rng(5);
  for (std::int64_t m : {1, 4, 7, 40}) {
    const Params p = MakeToyParams(m + 2, 1, 1);
    const GroundSet g = p.ground();
    const std::int64_t n = g.n();
    std::vector<std::vector<int>> w(2, std::vector<int>(n, 0));
    for (std::int64_t j = 0; j < n; ++j) w[j < g.m() ? 0 : 1][j] = 1;
    for (int trial = 0; trial < 30; ++trial) {
      const Subset x = testing::RandomSubset(g, rng);
      std::int64_t row[2] = {0, 0};
      for (int r = 0; r < 2; ++r) {
        for (std::int64_t j = 0; j < n; ++j) {
          row[r] += w[r][j] * (x.Contains(j + 1) ? 1 : 0);
        }
      }
      EXPECT_EQ(ApplyW(p, x), (ImagePoint{row[0], row[1]}));
      EXPECT_EQ(Objective(p, x), EvalF(p, ApplyW(p, x)));
    }
  }
}

}  // namespace
}  // namespace indsys
