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

#include "indsys/image.h"

#include <string>

#include "indsys/errors.h"

namespace indsys {

bool InClosedFormImage(const Params& params, const SystemKind& kind,
                       const ImagePoint& y) {
  if (std::holds_alternative<ExplicitSystem>(kind)) {
    throw UnsupportedKindError("no closed-form image for explicit systems");
  }
  if (y.y1 < 0 || y.y2 < 0) return false;
  if (InStar(params, y)) return true;
  return std::holds_alternative<HiddenSystem>(kind) &&
         InObjectiveBox(params, y);
}

Image ClosedFormImage(const Params& params, const SystemKind& kind,
                      std::int64_t budget) {
  if (std::holds_alternative<ExplicitSystem>(kind)) {
    throw UnsupportedKindError("no closed-form image for explicit systems");
  }
  const std::int64_t m = params.m();
  if (m + 1 > budget / (m + 1)) {
    throw EnumerationTooLargeError(
        "closed-form image ranges over (m+1)^2 points with m = " +
        std::to_string(m) + ", enumeration budget is " +
        std::to_string(budget));
  }
  Image image;
  for (std::int64_t y1 = 0; y1 <= m; ++y1) {
    for (std::int64_t y2 = 0; y2 <= m; ++y2) {
      if (InClosedFormImage(params, kind, {y1, y2})) image.insert({y1, y2});
    }
  }
  return image;
}

Image EnumeratedImage(const Params& params, const SystemKind& kind,
                      std::int64_t budget) {
  Image image;
  if (const auto* explicit_system = std::get_if<ExplicitSystem>(&kind)) {
    for (const Subset& x : explicit_system->members) {
      image.insert(ApplyW(params, x));
    }
    return image;
  }
  ForEachSubset(
      params.ground(),
      [&](const Subset& x) {
        if (Member(params, kind, x)) image.insert(ApplyW(params, x));
      },
      budget);
  return image;
}

}  // namespace indsys
