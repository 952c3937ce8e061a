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

#include "indsys/oracle.h"

#include <gtest/gtest.h>

#include "indsys/enumerate.h"
#include "indsys/errors.h"
#include "indsys/image.h"
#include "indsys/query_io.h"
#include "test_util.h"

namespace indsys {
namespace {

using testing::AllSubsetSums;
using testing::BruteMax;
using testing::MasksWhere;

Subset FirstY(const Params& p) {
  return EnumerateLevel(p.ground(), p.k() + p.l(), p.k() + p.l()).front();
}

// Hidden sets spread over the level: first, last and a few in between.
std::vector<Subset> SomeHiddenSets(const Params& p, std::size_t count) {
  const auto all = EnumerateLevel(p.ground(), p.k() + p.l(), p.k() + p.l());
  std::vector<Subset> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(all[i * (all.size() - 1) / (count - 1)]);
  }
  return out;
}

void ExpectMatchesBrute(const Params& p, const SystemKind& kind,
                        const std::vector<std::uint64_t>& members,
                        const std::vector<std::int64_t>& c) {
  const auto sums = AllSubsetSums(c);
  const auto [value, mask] = BruteMax(members, sums);
  const OptResult got = LinOpt(p, kind, c);
  ASSERT_EQ(got.value, value) << FormatSparse(c);
  ASSERT_EQ(got.witness.mask(), mask) << FormatSparse(c);
  ASSERT_TRUE(Member(p, kind, got.witness));
}

TEST(MemberTest, StarExamples) {
  const Params p = MakeToyParams(4, 1, 2);
  const GroundSet g = p.ground();
  const SystemKind star = MakeStarSystem();
  EXPECT_TRUE(Member(p, star, Subset::FromElements(g, {1, 2, 3, 4, 5})));
  EXPECT_TRUE(Member(p, star, Subset::FromElements(g, {1, 5, 6, 7, 8})));
  EXPECT_FALSE(Member(p, star, Subset::FromElements(g, {1, 2, 5, 6})));
  EXPECT_TRUE(Member(p, star, Subset(g)));
}

TEST(MemberTest, HiddenAddsSubsetsOfY) {
  const Params p = MakeToyParams(4, 1, 2);
  const GroundSet g = p.ground();
  const Subset y = FirstY(p);
  EXPECT_EQ(y, Subset::FromElements(g, {1, 2, 3, 5, 6, 7}));
  const SystemKind sy = MakeHiddenSystem(p, y);
  EXPECT_TRUE(Member(p, sy, Subset::FromElements(g, {1, 2, 5, 6})));
  EXPECT_TRUE(Member(p, sy, y));
  EXPECT_FALSE(Member(p, sy, Subset::FromElements(g, {1, 2, 4, 5, 6})));
}

TEST(MemberTest, MatchesDefinitionExhaustively) {
  for (const Params& p : {MakeToyParams(4, 1, 2), MakeToyParams(5, 2, 2)}) {
    const Subset y = FirstY(p);
    const SystemKind star = MakeStarSystem();
    const SystemKind sy = MakeHiddenSystem(p, y);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.n()); ++mask) {
      const Subset x = Subset::FromMask(p.ground(), mask);
      ASSERT_EQ(Member(p, star, x), testing::StarByDefinition(p, mask));
      ASSERT_EQ(Member(p, sy, x),
                testing::HiddenByDefinition(p, y.mask(), mask));
    }
  }
}

TEST(MakeHiddenSystemTest, RejectsWrongLevel) {
  const Params p = MakeToyParams(4, 1, 2);
  EXPECT_THROW(MakeHiddenSystem(p, Subset::FromElements(p.ground(), {1, 2})),
               LevelError);
}

TEST(LinOptTest, SimpleQueries) {
  const Params p = MakeToyParams(4, 1, 2);
  const SystemKind star = MakeStarSystem();
  const OptResult ones = LinOpt(p, star, std::vector<std::int64_t>(8, 1));
  EXPECT_EQ(ones.value, 5);
  EXPECT_EQ(ones.witness, Subset::FromElements(p.ground(), {1, 2, 3, 4, 5}));
  EXPECT_EQ(ones.branch, Branch::kFirstBlockFull);
  const OptResult zero = LinOpt(p, star, std::vector<std::int64_t>(8, 0));
  EXPECT_EQ(zero.value, 0);
  EXPECT_TRUE(zero.witness.empty());
  const OptResult neg = LinOpt(p, star, std::vector<std::int64_t>(8, -3));
  EXPECT_EQ(neg.value, 0);
  EXPECT_TRUE(neg.witness.empty());
}

TEST(LinOptTest, HiddenBranchWinsOnIndicatorOfY) {
  const Params p = MakeToyParams(4, 1, 2);
  const Subset y = FirstY(p);
  std::vector<std::int64_t> c(8, 0);
  for (std::int64_t e : y.Elements()) c[e - 1] = 1;
  EXPECT_EQ(LinOpt(p, MakeStarSystem(), c).value, 4);
  const OptResult r = LinOpt(p, MakeHiddenSystem(p, y), c);
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.witness, y);
  EXPECT_EQ(r.branch, Branch::kInsideHidden);
}

TEST(LinOptTest, ExhaustiveSmallWeightsAgainstBruteForce) {
  const Params p = MakeToyParams(4, 1, 2);
  const auto star_members =
      MasksWhere(p, [&](std::uint64_t x) { return testing::StarByDefinition(p, x); });
  const Subset y = SomeHiddenSets(p, 3)[1];
  const auto hidden_members = MasksWhere(p, [&](std::uint64_t x) {
    return testing::HiddenByDefinition(p, y.mask(), x);
  });
  const SystemKind star = MakeStarSystem();
  const SystemKind sy = MakeHiddenSystem(p, y);
  testing::ForEachVector(8, -2, 2, [&](const std::vector<std::int64_t>& c) {
    ExpectMatchesBrute(p, star, star_members, c);
    ExpectMatchesBrute(p, sy, hidden_members, c);
  });
}

TEST(LinOptTest, RandomWeightsAgainstBruteForce) {
  const Params p = MakeToyParams(6, 2, 2);
  const auto star_members =
      MasksWhere(p, [&](std::uint64_t x) { return testing::StarByDefinition(p, x); });
  Rng rng(99);
  for (const Subset& y : SomeHiddenSets(p, 3)) {
    const auto hidden_members = MasksWhere(p, [&](std::uint64_t x) {
      return testing::HiddenByDefinition(p, y.mask(), x);
    });
    const SystemKind sy = MakeHiddenSystem(p, y);
    for (int trial = 0; trial < 300; ++trial) {
      const auto c = testing::RandomWeights(rng, p.n(), trial % 2 ? 3 : 1000);
      ExpectMatchesBrute(p, MakeStarSystem(), star_members, c);
      ExpectMatchesBrute(p, sy, hidden_members, c);
      EXPECT_GE(LinOpt(p, sy, c).value, LinOpt(p, MakeStarSystem(), c).value);
    }
  }
}

TEST(LinOptTest, ExplicitScanAgreesWithStar) {
  const Params p = MakeToyParams(4, 1, 2);
  std::vector<Subset> members;
  ForEachSubset(p.ground(), [&](const Subset& x) {
    if (Member(p, MakeStarSystem(), x)) members.push_back(x);
  });
  const SystemKind listed = MakeExplicitSystem(members);
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testing::RandomWeights(rng, p.n(), 5);
    const OptResult a = LinOpt(p, listed, c);
    const OptResult b = LinOpt(p, MakeStarSystem(), c);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.branch, Branch::kExplicitScan);
  }
}

TEST(LinOptTest, RejectsBadQueries) {
  const Params p = MakeToyParams(4, 1, 2);
  const SystemKind star = MakeStarSystem();
  EXPECT_THROW(LinOpt(p, star, std::vector<std::int64_t>(7, 0)), QueryError);
  std::vector<std::int64_t> c(8, 0);
  c[3] = kDefaultMagnitudeCap + 1;
  EXPECT_THROW(LinOpt(p, star, c), QueryError);
  c[3] = -kDefaultMagnitudeCap;
  EXPECT_NO_THROW(LinOpt(p, star, c));
  c[3] = 11;
  EXPECT_THROW(LinOpt(p, star, c, 10), QueryError);
}

TEST(LinOptTest, PaperScaleQueryIsFast) {
  const Params p = MakePaperParams(1024);
  std::vector<std::int64_t> c(static_cast<std::size_t>(p.n()), 0);
  Rng rng(1);
  for (auto& v : c) v = rng.Uniform(-5, 5);
  const OptResult r = LinOpt(p, MakeStarSystem(), c);
  EXPECT_TRUE(Member(p, MakeStarSystem(), r.witness));
  EXPECT_EQ(r.witness.Dot(c), r.value);
}

TEST(BranchTest, NamesRoundTrip) {
  for (Branch b : {Branch::kFirstBlockFull, Branch::kSecondBlockFull,
                   Branch::kInsideHidden, Branch::kExplicitScan}) {
    EXPECT_EQ(ParseBranch(ToString(b)), b);
  }
  EXPECT_THROW(ParseBranch("sideways"), FormatError);
}

TEST(DownClosureTest, StarAndHiddenAreIndependenceSystems) {
  const Params p = MakeToyParams(4, 1, 2);
  for (const SystemKind& kind :
       {MakeStarSystem(), MakeHiddenSystem(p, FirstY(p))}) {
    const DownClosureResult exhaustive = DownClosureCheckExhaustive(p, kind);
    EXPECT_TRUE(exhaustive.ok);
    EXPECT_GT(exhaustive.pairs_checked, 0);
    EXPECT_TRUE(DownClosureCheck(p, kind, 2000, 3).ok);
  }
  const Params big = MakeToyParams(6, 2, 2);
  const DownClosureResult sampled =
      DownClosureCheck(big, MakeHiddenSystem(big, FirstY(big)), 10000, 8);
  EXPECT_TRUE(sampled.ok);
  EXPECT_EQ(sampled.pairs_checked, 10000);
}

TEST(DownClosureTest, BrokenListIsReported) {
  const Params p = MakeToyParams(2, 1, 1);
  const GroundSet g = p.ground();
  const Subset top = Subset::FromElements(g, {1, 3});
  std::vector<Subset> members = {Subset(g), Subset::FromElements(g, {1}), top};
  const DownClosureResult r =
      DownClosureCheckExhaustive(p, MakeExplicitSystemUnchecked(members));
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->first, top);
  EXPECT_EQ(r.violation->second, Subset::FromElements(g, {3}));
  EXPECT_THROW(MakeExplicitSystem(members), ParameterError);
  EXPECT_THROW(MakeExplicitSystem({Subset::FromElements(g, {1})}),
               ParameterError);
}

TEST(ImageTest, StarImageAtSmallToy) {
  const Params p = MakeToyParams(4, 1, 2);
  const Image star = ClosedFormImage(p, MakeStarSystem());
  EXPECT_EQ(star.size(), 16u);
  EXPECT_TRUE(star.count({0, 0}));
  for (const ImagePoint& y : star) EXPECT_FALSE(InObjectiveBox(p, y));
}

TEST(ImageTest, HiddenImageAddsTheBox) {
  const Params p = MakeToyParams(4, 1, 2);
  const Image star = ClosedFormImage(p, MakeStarSystem());
  const Image sy = ClosedFormImage(p, MakeHiddenSystem(p, FirstY(p)));
  EXPECT_EQ(sy.size(), star.size() + 4);
  for (const ImagePoint& y : sy) {
    if (!star.count(y)) EXPECT_TRUE(InObjectiveBox(p, y)) << ToString(y);
  }
  EXPECT_TRUE(sy.count({0, 0}));
}

TEST(ImageTest, ClosedFormMatchesEnumeration) {
  for (const Params& p : {MakeToyParams(4, 1, 2), MakeToyParams(6, 2, 2)}) {
    EXPECT_EQ(ClosedFormImage(p, MakeStarSystem()),
              EnumeratedImage(p, MakeStarSystem()));
    for (const Subset& y : SomeHiddenSets(p, 5)) {
      const SystemKind sy = MakeHiddenSystem(p, y);
      EXPECT_EQ(ClosedFormImage(p, sy), EnumeratedImage(p, sy))
          << y.ToString();
    }
  }
}

TEST(ImageTest, ExplicitSystemsHaveNoClosedForm) {
  const Params p = MakeToyParams(2, 1, 1);
  const SystemKind listed = MakeExplicitSystem({Subset(p.ground())});
  EXPECT_THROW(ClosedFormImage(p, listed), UnsupportedKindError);
  EXPECT_EQ(EnumeratedImage(p, listed), (Image{{0, 0}}));
}

}  // namespace
}  // namespace indsys
