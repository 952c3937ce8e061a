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

#include "indsys/claim.h"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "indsys/enumerate.h"
#include "indsys/errors.h"
#include "indsys/query_io.h"
#include "test_util.h"

namespace indsys {
namespace {

using testing::AllSubsetSums;

std::vector<std::uint64_t> StarMembers(const Params& p) {
  return testing::MasksWhere(
      p, [&](std::uint64_t x) { return testing::StarByDefinition(p, x); });
}

// T-set straight from its definition, as ascending masks.
std::vector<std::uint64_t> BruteTSet(const Params& p,
                                     const std::vector<std::uint64_t>& star,
                                     const std::vector<std::int64_t>& c,
                                     std::int64_t i1, std::int64_t i2) {
  const auto sums = AllSubsetSums(c);
  const std::int64_t star_max = testing::BruteMax(star, sums).first;
  return testing::MasksWhere(p, [&](std::uint64_t z) {
    return testing::LowCount(z, p.m()) == p.k() + i1 &&
           testing::HighCount(z, p.m()) == p.k() + i2 && sums[z] > star_max;
  });
}

std::vector<std::uint64_t> Masks(const TSet& t) {
  std::vector<std::uint64_t> out;
  for (const Subset& z : t.members) out.push_back(z.mask());
  return out;
}

// Cross-intersection, Frankl ratio and the exchange argument for every
// T-set of c.
void ExpectClaimHolds(const Params& p, const std::vector<std::int64_t>& c) {
  for (const TSet& t : ComputeAllTSets(p, c)) {
    ASSERT_TRUE(CheckCrossIntersecting(p, t).ok)
        << FormatSparse(c) << " i=" << t.i1 << "," << t.i2;
    ASSERT_TRUE(FranklRatioCheck(p, t).verdict)
        << FormatSparse(c) << " i=" << t.i1 << "," << t.i2;
  }
}

TEST(TSetTest, ZeroQueryGivesEmptySets) {
  const Params p = MakeToyParams(4, 1, 2);
  for (const TSet& t : ComputeAllTSets(p, std::vector<std::int64_t>(8, 0))) {
    EXPECT_EQ(t.star_max, 0);
    EXPECT_TRUE(t.members.empty());
  }
}

TEST(TSetTest, IndicatorOfHiddenSet) {
  const Params p = MakeToyParams(4, 1, 2);
  const Subset y = Subset::FromElements(p.ground(), {1, 2, 3, 5, 6, 7});
  std::vector<std::int64_t> c(8, 0);
  for (std::int64_t e : y.Elements()) c[e - 1] = 1;
  EXPECT_EQ(ComputeTSet(p, c, 1, 1).size(), 0);
  EXPECT_EQ(ComputeTSet(p, c, 1, 2).size(), 3);
  EXPECT_EQ(ComputeTSet(p, c, 2, 1).size(), 3);
  const TSet top = ComputeTSet(p, c, 2, 2);
  EXPECT_EQ(top.star_max, 4);
  EXPECT_EQ(top.size(), 7);
  EXPECT_TRUE(std::count(top.members.begin(), top.members.end(), y));
}

TEST(TSetTest, RejectsIndicesOutsideRange) {
  const Params p = MakeToyParams(4, 1, 2);
  const std::vector<std::int64_t> c(8, 1);
  EXPECT_THROW(ComputeTSet(p, c, 0, 1), LevelError);
  EXPECT_THROW(ComputeTSet(p, c, 1, 3), LevelError);
}

TEST(TSetTest, MatchesDefinitionOnRandomQueries) {
  const Params p = MakeToyParams(6, 2, 2);
  const auto star = StarMembers(p);
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::RandomWeights(rng, p.n(), trial % 3 ? 3 : 50);
    for (const TSet& t : ComputeAllTSets(p, c)) {
      ASSERT_EQ(Masks(t), BruteTSet(p, star, c, t.i1, t.i2))
          << FormatSparse(c);
      for (const Subset& z : t.members) ASSERT_GT(z.Dot(c), t.star_max);
      ASSERT_LE(Compare(BigCount::Exact(t.size()), TSetSizeBound(p)), 0);
    }
  }
}

TEST(CrossIntersectionTest, TrivialFamilies) {
  const Params p = MakeToyParams(4, 1, 2);
  TSet t;
  t.i1 = 1;
  t.i2 = 1;
  EXPECT_TRUE(CheckCrossIntersecting(p, t).ok);
  t.members.push_back(Subset::FromElements(p.ground(), {1, 2, 5, 6}));
  EXPECT_TRUE(CheckCrossIntersecting(p, t).ok);
  t.members.push_back(Subset::FromElements(p.ground(), {3, 4, 7, 8}));
  const CrossIntersectionResult r = CheckCrossIntersecting(p, t);
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.violation.has_value());
}

TEST(CrossIntersectionTest, HoldsOnRandomQueries) {
  for (const Params& p : {MakeToyParams(4, 1, 2), MakeToyParams(6, 2, 2),
                          MakeToyParams(5, 1, 2)}) {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      ExpectClaimHolds(p, testing::RandomWeights(rng, p.n(), 6));
    }
  }
}

TEST(ExchangeTest, EqualSetsGiveThemselves) {
  const Params p = MakeToyParams(4, 1, 2);
  const Subset u = Subset::FromElements(p.ground(), {1, 2, 6});
  const ExchangeResult r =
      ExchangeWitness(p, u, u, std::vector<std::int64_t>(8, 3));
  EXPECT_EQ(r.a, u);
  EXPECT_EQ(r.b, u);
  EXPECT_EQ(r.gain_left, 0);
  EXPECT_TRUE(r.identity_holds);
}

TEST(ExchangeTest, IdentityOnRandomTriples) {
  const Params p = MakeToyParams(6, 2, 2);
  const GroundSet g = p.ground();
  Rng rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    const Subset u = testing::RandomSubset(g, rng);
    const Subset v = testing::RandomSubset(g, rng);
    const auto c = testing::RandomWeights(rng, p.n(), 1000);
    const ExchangeResult r = ExchangeWitness(p, u, v, c);
    ASSERT_TRUE(r.identity_holds);
    ASSERT_EQ(u.Dot(c) - r.a.Dot(c), r.b.Dot(c) - v.Dot(c));
    ASSERT_EQ(r.a, (u.Block1() & v.Block1()) | (u.Block2() | v.Block2()));
    ASSERT_EQ(r.b, (u.Block1() | v.Block1()) | (u.Block2() & v.Block2()));
  }
}

TEST(ExchangeTest, NoRealPairHasBothExchangesInStar) {
  const Params p = MakeToyParams(6, 2, 2);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testing::RandomWeights(rng, p.n(), 4);
    for (const TSet& t : ComputeAllTSets(p, c)) {
      for (const Subset& u : t.members) {
        for (const Subset& v : t.members) {
          const ExchangeResult r = ExchangeWitness(p, u, v, c);
          ASSERT_FALSE(r.a_in_star && r.b_in_star)
              << u.ToString() << " " << v.ToString();
        }
      }
    }
  }
}

TEST(FranklRatioTest, EmptyAndFullSizeFamilies) {
  const Params p = MakeToyParams(4, 1, 1);
  std::vector<std::int64_t> c(8, 0);
  EXPECT_TRUE(FranklRatioCheck(p, ComputeTSet(p, c, 1, 1)).verdict);
}

TEST(FranklRatioTest, ExhaustiveTernaryWeightsAtSmallestToy) {
  const Params p = MakeToyParams(4, 1, 1);
  testing::ForEachVector(8, -1, 1, [&](const std::vector<std::int64_t>& c) {
    ExpectClaimHolds(p, c);
  });
}

// Every ternary weight vector for n <= 8, and for m = 5, 6 one vector per
// orbit under permutations inside each block (non-increasing within blocks).
// Cross-intersection and the size cap hold everywhere. The ratio bound fails
// exactly when m = k + 3 and c is all ones: T(2,2) is then the whole level
// set, since any two (k+2)-subsets of a (k+3)-set share k+1 elements.
TEST(ClaimSweepTest, AllSmallInstances) {
  std::int64_t checked = 0;
  std::vector<std::string> ratio_failures;
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t k = 1; k < m; ++k) {
      for (std::int64_t l = 1; l <= 2 && k + l <= m; ++l) {
        const Params p = MakeToyParams(m, k, l);
        testing::ForEachVector(p.n(), -1, 1,
                               [&](const std::vector<std::int64_t>& c) {
          const auto mid = c.begin() + m;
          if (p.n() > 8 &&
              (!std::is_sorted(c.begin(), mid, std::greater<>()) ||
               !std::is_sorted(mid, c.end(), std::greater<>()))) {
            return;
          }
          for (const TSet& t : ComputeAllTSets(p, c)) {
            ASSERT_TRUE(CheckCrossIntersecting(p, t).ok) << FormatSparse(c);
            ASSERT_LE(Compare(BigCount::Exact(t.size()), TSetSizeBound(p)), 0);
            if (!FranklRatioCheck(p, t).verdict) {
              ratio_failures.push_back(p.ToString() + " i=" +
                                       std::to_string(t.i1) + "," +
                                       std::to_string(t.i2) + " c=" +
                                       FormatSparse(c));
            }
          }
          ++checked;
        });
      }
    }
  }
  EXPECT_GT(checked, 0);
  const std::vector<std::string> expected = {
      "toy(m=4,k=1,l=2) i=2,2 c=1:1 2:1 3:1 4:1 5:1 6:1 7:1 8:1",
      "toy(m=5,k=2,l=2) i=2,2 c=1:1 2:1 3:1 4:1 5:1 6:1 7:1 8:1 9:1 10:1",
      "toy(m=6,k=3,l=2) i=2,2 c=1:1 2:1 3:1 4:1 5:1 6:1 7:1 8:1 9:1 10:1 "
      "11:1 12:1",
  };
  EXPECT_EQ(ratio_failures, expected);
}

TEST(FranklRatioTest, FailsWhenLevelSetIsIntersecting) {
  for (std::int64_t k = 1; k <= 3; ++k) {
    const Params p = MakeToyParams(k + 3, k, 2);
    const std::vector<std::int64_t> c(static_cast<std::size_t>(p.n()), 1);
    const TSet t = ComputeTSet(p, c, 2, 2);
    EXPECT_EQ(Compare(BigCount::Exact(t.size()),
                      LevelSize(p.ground(), k + 2, k + 2)),
              0);
    EXPECT_TRUE(CheckCrossIntersecting(p, t).ok);
    const BoundReport r = FranklRatioCheck(p, t);
    EXPECT_FALSE(r.verdict);
    ASSERT_TRUE(r.lhs.is_exact() && r.rhs.is_exact());
    EXPECT_EQ(*r.lhs.exact(), BigRational(1));
    EXPECT_EQ(*r.rhs.exact(), BigRational(2, k + 3));
  }
}

TEST(ClaimSweepTest, BlockPermutationsPreserveTSetSizes) {
  const Params p = MakeToyParams(5, 2, 2);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = testing::RandomWeights(rng, p.n(), 3);
    const auto before = ComputeAllTSets(p, c);
    for (std::size_t i = 4; i > 0; --i) {
      std::swap(c[i], c[rng.Uniform(0, i)]);
      std::swap(c[5 + i], c[5 + rng.Uniform(0, i)]);
    }
    const auto after = ComputeAllTSets(p, c);
    ASSERT_EQ(before.size(), after.size());
    for (std::size_t j = 0; j < before.size(); ++j) {
      EXPECT_EQ(before[j].size(), after[j].size());
      EXPECT_EQ(before[j].star_max, after[j].star_max);
    }
  }
}

}  // namespace
}  // namespace indsys
