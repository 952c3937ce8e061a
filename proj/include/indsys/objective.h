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

#ifndef INDSYS_OBJECTIVE_H_
#define INDSYS_OBJECTIVE_H_

#include <cstdint>

#include "indsys/params.h"
#include "indsys/subset.h"

namespace indsys {

// A point y = (y1, y2) of the image W S.
using ImagePoint = Level;

// f(y) = (y1 - k) - l (y2 - k) - 1 on the box k+1 <= y1, y2 <= k+l, and 0
// everywhere else. Total on integer pairs.
std::int64_t EvalF(const Params& params, const ImagePoint& y);

// True on the box where f is negative.
bool InObjectiveBox(const Params& params, const ImagePoint& y);

// W X for the 2 x n matrix whose first m columns are e1 and last m are e2,
// i.e. (|X1|, |X2|). Throws InvalidSubsetError on a ground-set mismatch.
ImagePoint ApplyW(const Params& params, const Subset& x);

// f(W X).
std::int64_t Objective(const Params& params, const Subset& x);

}  // namespace indsys

#endif  // INDSYS_OBJECTIVE_H_
