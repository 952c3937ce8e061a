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

namespace indsys {

bool InObjectiveBox(const Params& params, const ImagePoint& y) {
  const std::int64_t lo = params.k() + 1;
  const std::int64_t hi = params.k() + params.l();
  return lo <= y.y1 && y.y1 <= hi && lo <= y.y2 && y.y2 <= hi;
}

std::int64_t EvalF(const Params& params, const ImagePoint& y) {
  if (!InObjectiveBox(params, y)) return 0;
  return (y.y1 - params.k()) - params.l() * (y.y2 - params.k()) - 1;
}

ImagePoint ApplyW(const Params& params, const Subset& x) {
  return LevelOf(x, params.ground());
}

std::int64_t Objective(const Params& params, const Subset& x) {
  return EvalF(params, ApplyW(params, x));
}

}  // namespace indsys
