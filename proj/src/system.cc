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

#include "indsys/system.h"

#include <algorithm>

#include "indsys/errors.h"
#include "overloaded.h"

namespace indsys {
namespace {

using internal::Overloaded;

void Normalize(std::vector<Subset>& members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

}  // namespace

SystemKind MakeStarSystem() { return StarSystem{}; }

SystemKind MakeHiddenSystem(const Params& params, const Subset& hidden) {
  const Level level = LevelOf(hidden, params.ground());
  const std::int64_t target = params.k() + params.l();
  if (level.y1 != target || level.y2 != target) {
    throw LevelError("hidden set must be at level " +
                     ToString(Level{target, target}) + ", got " +
                     ToString(level));
  }
  return HiddenSystem{hidden};
}

SystemKind MakeExplicitSystem(std::vector<Subset> members) {
  Normalize(members);
  if (members.empty() || !members.front().empty()) {
    throw ParameterError("explicit system must contain the empty set");
  }
  // Down-closed iff every one-element deletion of a member is a member.
  for (const Subset& x : members) {
    for (std::int64_t e : x.Elements()) {
      Subset smaller = x;
      smaller.Erase(e);
      if (!std::binary_search(members.begin(), members.end(), smaller)) {
        throw ParameterError("explicit system is not down-closed: " +
                             x.ToString() + " is listed but " +
                             smaller.ToString() + " is not");
      }
    }
  }
  return ExplicitSystem{std::move(members)};
}

SystemKind MakeExplicitSystemUnchecked(std::vector<Subset> members) {
  Normalize(members);
  return ExplicitSystem{std::move(members)};
}

std::string KindName(const SystemKind& kind) {
  return std::visit(
      Overloaded{
          [](const StarSystem&) -> std::string { return "S*"; },
          [](const HiddenSystem& s) -> std::string {
            return "S_Y[Y=" + s.hidden.ToString() + "]";
          },
          [](const ExplicitSystem& s) -> std::string {
            return "explicit[" + std::to_string(s.members.size()) + "]";
          },
      },
      kind);
}

bool InStar(const Params& params, const Level& level) {
  const std::int64_t m = params.m();
  const std::int64_t k = params.k();
  return (level.y1 <= m && level.y2 <= k) || (level.y1 <= k && level.y2 <= m);
}

bool Member(const Params& params, const SystemKind& kind, const Subset& x) {
  if (!(x.ground() == params.ground())) return false;
  return std::visit(
      Overloaded{
          [&](const StarSystem&) { return InStar(params, x.level()); },
          [&](const HiddenSystem& s) {
            return InStar(params, x.level()) || x.IsSubsetOf(s.hidden);
          },
          [&](const ExplicitSystem& s) {
            return std::binary_search(s.members.begin(), s.members.end(), x);
          },
      },
      kind);
}

}  // namespace indsys
