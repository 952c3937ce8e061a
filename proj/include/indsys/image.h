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

#ifndef INDSYS_IMAGE_H_
#define INDSYS_IMAGE_H_

#include <cstdint>
#include <set>

#include "indsys/enumerate.h"
#include "indsys/objective.h"
#include "indsys/params.h"
#include "indsys/system.h"

namespace indsys {

using Image = std::set<ImagePoint>;

// Whether y lies in the closed-form image of S* or S_Y. The S_Y image does
// not depend on which Y is hidden. Throws UnsupportedKindError for explicit
// systems.
bool InClosedFormImage(const Params& params, const SystemKind& kind,
                       const ImagePoint& y);

// W S* = {y <= (m,k)} ∪ {y <= (k,m)}, and
// W S_Y = W S* ⊎ {(k+1,k+1) <= y <= (k+l,k+l)}.
// Throws UnsupportedKindError for explicit systems and
// EnumerationTooLargeError when (m+1)^2 exceeds `budget`.
Image ClosedFormImage(const Params& params, const SystemKind& kind,
                      std::int64_t budget = kDefaultEnumerationBudget);

// {W X : X in system}, by walking the power set (or the explicit list).
Image EnumeratedImage(const Params& params, const SystemKind& kind,
                      std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace indsys

#endif  // INDSYS_IMAGE_H_
