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

#ifndef INDSYS_HIDDEN_H_
#define INDSYS_HIDDEN_H_

#include <cstdint>
#include <optional>

#include "indsys/adversary.h"
#include "indsys/big_count.h"
#include "indsys/enumerate.h"
#include "indsys/params.h"
#include "indsys/subset.h"

namespace indsys {

struct SupersetCount {
  // Number of Y in S_{k+l,k+l} containing Z:
  // C(m-(k+i1), l-i1) C(m-(k+i2), l-i2).
  BigCount count;
  // C(m,l)^2.
  BigCount bound;
  bool within_bound = false;
};

// Throws LevelError unless Z is at level (k+i1, k+i2) with 1 <= i1, i2 <= l.
SupersetCount CountSupersets(const Params& params, const Subset& z);

struct HiddenSearch {
  // First surviving Y in subset order, if any.
  std::optional<Subset> survivor;
  std::int64_t candidates = 0;
  std::int64_t eliminated = 0;
};

// Walks S_{k+l,k+l} and eliminates every Y containing a member of some
// T_{i1,i2}(c^p). Survivors answer every logged query exactly like S*.
HiddenSearch SearchHiddenY(const Params& params, const QueryLog& log,
                           std::int64_t budget = kDefaultEnumerationBudget);

// The first survivor, or nullopt when every candidate is eliminated (a legal
// outcome at toy scale, where the counting bound need not bind).
std::optional<Subset> FindHiddenY(
    const Params& params, const QueryLog& log,
    std::int64_t budget = kDefaultEnumerationBudget);

// True iff every logged answer value equals the S_Y optimum of its query,
// i.e. the transcript is consistent with both S* and S_Y. Throws LevelError
// unless Y is at level (k+l, k+l).
bool VerifyTranscript(const Params& params, const Subset& hidden,
                      const QueryLog& log);

// q l^2 C(m,l)^3 C(m,k+l), the cap on eliminated hidden sets after q
// queries. Requires q >= 0.
BigCount EliminatedYBound(const Params& params, std::int64_t q);

// sum over logged queries and (i1, i2) of C(m,l)^2 |T_{i1,i2}(c^p)|.
BigCount EliminatedYSumBound(const Params& params, const QueryLog& log,
                             std::int64_t budget = kDefaultEnumerationBudget);

// |S_{k+l,k+l}| = C(m,k+l)^2.
BigCount HiddenCandidateCount(const Params& params);

}  // namespace indsys

#endif  // INDSYS_HIDDEN_H_
