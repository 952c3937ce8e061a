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

#ifndef INDSYS_SYSTEM_H_
#define INDSYS_SYSTEM_H_

#include <string>
#include <variant>
#include <vector>

#include "indsys/params.h"
#include "indsys/subset.h"

namespace indsys {

// S* = {X : (|X1|,|X2|) <= (m,k) or (|X1|,|X2|) <= (k,m)}.
struct StarSystem {};

// S_Y = S* ∪ {X : X ⊆ Y} for a hidden Y at level (k+l, k+l).
struct HiddenSystem {
  Subset hidden;
};

// An explicitly listed family, kept sorted and deduplicated.
struct ExplicitSystem {
  std::vector<Subset> members;
};

using SystemKind = std::variant<StarSystem, HiddenSystem, ExplicitSystem>;

SystemKind MakeStarSystem();

// Throws LevelError unless `hidden` is at level (k+l, k+l) and
// InvalidSubsetError on a ground-set mismatch.
SystemKind MakeHiddenSystem(const Params& params, const Subset& hidden);

// Throws ParameterError when the family does not contain the empty set or is
// not down-closed, naming a missing subset.
SystemKind MakeExplicitSystem(std::vector<Subset> members);

// No validation; used to exercise the down-closure verifier on broken input.
SystemKind MakeExplicitSystemUnchecked(std::vector<Subset> members);

// "S*", "S_Y[Y={...}]", "explicit[17]".
std::string KindName(const SystemKind& kind);

// Whether X belongs to the system.
bool Member(const Params& params, const SystemKind& kind, const Subset& x);

// Membership in S* by level alone.
bool InStar(const Params& params, const Level& level);

}  // namespace indsys

#endif  // INDSYS_SYSTEM_H_
