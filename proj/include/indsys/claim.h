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

#ifndef INDSYS_CLAIM_H_
#define INDSYS_CLAIM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "indsys/bounds.h"
#include "indsys/enumerate.h"
#include "indsys/oracle.h"
#include "indsys/params.h"

namespace indsys {

// T_{i1,i2}(c): members Z of the level set S_{k+i1,k+i2} with
// c Z > max{c X : X in S*}.
struct TSet {
  std::int64_t i1 = 1;
  std::int64_t i2 = 1;
  WeightVector query;
  // max{c X : X in S*}.
  std::int64_t star_max = 0;
  // In increasing subset order.
  std::vector<Subset> members;

  std::int64_t size() const {
    return static_cast<std::int64_t>(members.size());
  }
};

// Throws LevelError unless 1 <= i1, i2 <= l, and EnumerationTooLargeError
// when the level set exceeds `budget`.
TSet ComputeTSet(const Params& params, std::span<const std::int64_t> c,
                 std::int64_t i1, std::int64_t i2,
                 std::int64_t budget = kDefaultEnumerationBudget);

// All l^2 T-sets of one query.
std::vector<TSet> ComputeAllTSets(const Params& params,
                                  std::span<const std::int64_t> c,
                                  std::int64_t budget = kDefaultEnumerationBudget);

struct CrossIntersectionResult {
  bool ok = true;
  // A pair (U, V) with |U1 ∩ V1| <= k and |U2 ∩ V2| <= k.
  std::optional<std::pair<Subset, Subset>> violation;
};

// Checks |U1 ∩ V1| >= k+1 or |U2 ∩ V2| >= k+1 for every ordered pair of
// members, U = V included.
CrossIntersectionResult CheckCrossIntersecting(const Params& params,
                                               const TSet& tset);

struct ExchangeResult {
  // A = (U1 ∩ V1) ⊎ (U2 ∪ V2), B = (U1 ∪ V1) ⊎ (U2 ∩ V2).
  Subset a;
  Subset b;
  // c U - c A and c B - c V.
  std::int64_t gain_left = 0;
  std::int64_t gain_right = 0;
  bool identity_holds = false;
  bool a_in_star = false;
  bool b_in_star = false;
};

// The exchange pair of U and V. The identity c U - c A = c B - c V holds
// for every c; when both A and B are in S* it rules out U and V both beating
// the S* maximum.
ExchangeResult ExchangeWitness(const Params& params, const Subset& u,
                               const Subset& v,
                               std::span<const std::int64_t> c);

// |T| / (C(m,k+i1) C(m,k+i2)) <= max{C(m-k-1,i1-1)/C(m,k+i1),
//                                    C(m-k-1,i2-1)/C(m,k+i2)},
// in exact rationals.
BoundReport FranklRatioCheck(const Params& params, const TSet& tset);

// C(m,l) C(m,k+l), the cap every T-set must respect.
BigCount TSetSizeBound(const Params& params);

}  // namespace indsys

#endif  // INDSYS_CLAIM_H_
