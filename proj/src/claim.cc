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
#include <bit>
#include <string>

#include "indsys/errors.h"
#include "indsys/system.h"

namespace indsys {
namespace {

void CheckIndices(const Params& params, std::int64_t i1, std::int64_t i2) {
  if (i1 < 1 || i2 < 1 || i1 > params.l() || i2 > params.l()) {
    throw LevelError("T-set indices (" + std::to_string(i1) + "," +
                     std::to_string(i2) + ") outside [1, l]^2 for l = " +
                     std::to_string(params.l()));
  }
}

}  // namespace

TSet ComputeTSet(const Params& params, std::span<const std::int64_t> c,
                 std::int64_t i1, std::int64_t i2, std::int64_t budget) {
  CheckIndices(params, i1, i2);
  TSet t;
  t.i1 = i1;
  t.i2 = i2;
  t.query.assign(c.begin(), c.end());
  t.star_max = LinOpt(params, MakeStarSystem(), c).value;
  LevelEnumerator it(params.ground(), params.k() + i1, params.k() + i2,
                     budget);
  Subset z(params.ground());
  while (it.Next(z)) {
    if (z.Dot(c) > t.star_max) t.members.push_back(z);
  }
  return t;
}

std::vector<TSet> ComputeAllTSets(const Params& params,
                                  std::span<const std::int64_t> c,
                                  std::int64_t budget) {
  std::vector<TSet> out;
  for (std::int64_t i1 = 1; i1 <= params.l(); ++i1) {
    for (std::int64_t i2 = 1; i2 <= params.l(); ++i2) {
      out.push_back(ComputeTSet(params, c, i1, i2, budget));
    }
  }
  return out;
}

CrossIntersectionResult CheckCrossIntersecting(const Params& params,
                                               const TSet& tset) {
  CrossIntersectionResult result;
  const std::int64_t k = params.k();
  std::vector<std::pair<Subset, Subset>> blocks;
  blocks.reserve(tset.members.size());
  for (const Subset& z : tset.members) blocks.emplace_back(z.Block1(), z.Block2());
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a; b < blocks.size(); ++b) {
      const std::int64_t first = (blocks[a].first & blocks[b].first).size();
      if (first >= k + 1) continue;
      const std::int64_t second = (blocks[a].second & blocks[b].second).size();
      if (second >= k + 1) continue;
      result.ok = false;
      result.violation.emplace(tset.members[a], tset.members[b]);
      return result;
    }
  }
  return result;
}

ExchangeResult ExchangeWitness(const Params& params, const Subset& u,
                               const Subset& v,
                               std::span<const std::int64_t> c) {
  const Subset u1 = u.Block1();
  const Subset u2 = u.Block2();
  const Subset v1 = v.Block1();
  const Subset v2 = v.Block2();
  ExchangeResult r{(u1 & v1) | (u2 | v2), (u1 | v1) | (u2 & v2)};
  r.gain_left = u.Dot(c) - r.a.Dot(c);
  r.gain_right = r.b.Dot(c) - v.Dot(c);
  r.identity_holds = r.gain_left == r.gain_right;
  r.a_in_star = Member(params, MakeStarSystem(), r.a);
  r.b_in_star = Member(params, MakeStarSystem(), r.b);
  return r;
}

BoundReport FranklRatioCheck(const Params& params, const TSet& tset) {
  CheckIndices(params, tset.i1, tset.i2);
  const std::int64_t m = params.m();
  const std::int64_t k = params.k();
  const BigInt level1 = BinomExact(m, k + tset.i1);
  const BigInt level2 = BinomExact(m, k + tset.i2);
  const BigRational lhs(BigInt(tset.size()), level1 * level2);
  const BigRational term1(BinomExact(m - k - 1, tset.i1 - 1), level1);
  const BigRational term2(BinomExact(m - k - 1, tset.i2 - 1), level2);
  return MakeReport(
      "frankl_ratio(" + std::to_string(tset.i1) + "," +
          std::to_string(tset.i2) + ")",
      "|T|/|S_{k+i1,k+i2}| <= max{C(m-k-1,i1-1)/C(m,k+i1), "
      "C(m-k-1,i2-1)/C(m,k+i2)}",
      Quantity::Exact(lhs), Relation::kLessEqual,
      Quantity::Exact(std::max(term1, term2)));
}

BigCount TSetSizeBound(const Params& params) {
  return Binom(params.m(), params.l()) *
         Binom(params.m(), params.k() + params.l());
}

}  // namespace indsys
