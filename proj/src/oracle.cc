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

#include <algorithm>
#include <cstdlib>

#include "indsys/errors.h"
#include "indsys/random.h"
#include "overloaded.h"

namespace indsys {
namespace {

using internal::Overloaded;

struct Candidate {
  std::int64_t value;
  Subset witness;
  Branch branch;
};

// Better value wins; on equal value the smaller witness; then the earlier
// branch.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (auto c = a.witness <=> b.witness; c != 0) return c < 0;
  return static_cast<int>(a.branch) < static_cast<int>(b.branch);
}

// Elements of [lo, hi] with positive weight, heaviest first, ties by index.
std::vector<std::int64_t> PositiveByWeight(std::span<const std::int64_t> c,
                                           std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = lo; e <= hi; ++e) {
    if (c[e - 1] > 0) out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [&](std::int64_t a, std::int64_t b) {
    return c[a - 1] > c[b - 1];
  });
  return out;
}

// All positive elements of one block plus the `limit` heaviest positive
// elements of the other.
Candidate TruncationBranch(const Params& params,
                           std::span<const std::int64_t> c, bool first_full) {
  const std::int64_t m = params.m();
  const GroundSet ground = params.ground();
  Subset witness(ground);
  const auto [full_lo, full_hi] =
      first_full ? std::pair{std::int64_t{1}, m} : std::pair{m + 1, 2 * m};
  const auto [cut_lo, cut_hi] =
      first_full ? std::pair{m + 1, 2 * m} : std::pair{std::int64_t{1}, m};
  for (std::int64_t e = full_lo; e <= full_hi; ++e) {
    if (c[e - 1] > 0) witness.Insert(e);
  }
  const std::vector<std::int64_t> ranked = PositiveByWeight(c, cut_lo, cut_hi);
  const std::size_t take =
      std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(params.k()));
  for (std::size_t i = 0; i < take; ++i) witness.Insert(ranked[i]);
  const std::int64_t value = witness.Dot(c);
  return {value, std::move(witness),
          first_full ? Branch::kFirstBlockFull : Branch::kSecondBlockFull};
}

Candidate HiddenBranch(const Subset& hidden, std::span<const std::int64_t> c) {
  Subset witness(hidden.ground());
  hidden.ForEach([&](std::int64_t e) {
    if (c[e - 1] > 0) witness.Insert(e);
  });
  const std::int64_t value = witness.Dot(c);
  return {value, std::move(witness), Branch::kInsideHidden};
}

OptResult ToResult(Candidate c) {
  return OptResult{c.value, std::move(c.witness), c.branch};
}

OptResult StarOpt(const Params& params, std::span<const std::int64_t> c,
                  const Subset* hidden) {
  Candidate best = TruncationBranch(params, c, true);
  Candidate mirror = TruncationBranch(params, c, false);
  if (Better(mirror, best)) best = std::move(mirror);
  if (hidden != nullptr) {
    Candidate inside = HiddenBranch(*hidden, c);
    if (Better(inside, best)) best = std::move(inside);
  }
  return ToResult(std::move(best));
}

OptResult ExplicitOpt(const Params& params, const ExplicitSystem& system,
                      std::span<const std::int64_t> c) {
  if (system.members.empty()) {
    throw ParameterError("explicit system is empty");
  }
  std::optional<Candidate> best;
  for (const Subset& x : system.members) {
    if (!(x.ground() == params.ground())) {
      throw InvalidSubsetError("explicit member over the wrong ground set");
    }
    Candidate cand{x.Dot(c), x, Branch::kExplicitScan};
    if (!best || Better(cand, *best)) best = std::move(cand);
  }
  return ToResult(std::move(*best));
}

// A random member: a random subset shrunk until it is a member. Terminates
// whenever the empty set is a member.
Subset RandomMember(const Params& params, const SystemKind& kind, Rng& rng) {
  if (const auto* explicit_system = std::get_if<ExplicitSystem>(&kind)) {
    const auto& members = explicit_system->members;
    return members[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(members.size()) - 1))];
  }
  Subset x(params.ground());
  for (std::int64_t e = 1; e <= params.n(); ++e) {
    if (rng.Coin()) x.Insert(e);
  }
  while (!Member(params, kind, x)) {
    std::vector<std::int64_t> elems = x.Elements();
    x.Erase(elems[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(elems.size()) - 1))]);
  }
  return x;
}

}  // namespace

std::string ToString(Branch branch) {
  switch (branch) {
    case Branch::kFirstBlockFull:
      return "first-block-full";
    case Branch::kSecondBlockFull:
      return "second-block-full";
    case Branch::kInsideHidden:
      return "inside-hidden";
    case Branch::kExplicitScan:
      return "explicit-scan";
  }
  return "unknown";
}

Branch ParseBranch(const std::string& name) {
  for (Branch b : {Branch::kFirstBlockFull, Branch::kSecondBlockFull,
                   Branch::kInsideHidden, Branch::kExplicitScan}) {
    if (ToString(b) == name) return b;
  }
  throw FormatError("unknown oracle branch '" + name + "'");
}

void ValidateQuery(const Params& params, std::span<const std::int64_t> c,
                   std::int64_t cap) {
  if (static_cast<std::int64_t>(c.size()) != params.n()) {
    throw QueryError("query has length " + std::to_string(c.size()) +
                     ", expected n = " + std::to_string(params.n()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > cap || c[i] < -cap) {
      throw QueryError("query entry " + std::to_string(i + 1) + " = " +
                       std::to_string(c[i]) + " exceeds magnitude cap " +
                       std::to_string(cap));
    }
  }
}

OptResult LinOpt(const Params& params, const SystemKind& kind,
                 std::span<const std::int64_t> c, std::int64_t cap) {
  ValidateQuery(params, c, cap);
  return std::visit(
      Overloaded{
          [&](const StarSystem&) { return StarOpt(params, c, nullptr); },
          [&](const HiddenSystem& s) { return StarOpt(params, c, &s.hidden); },
          [&](const ExplicitSystem& s) { return ExplicitOpt(params, s, c); },
      },
      kind);
}

DownClosureResult DownClosureCheck(const Params& params,
                                   const SystemKind& kind,
                                   std::int64_t samples, std::uint64_t seed) {
  DownClosureResult result;
  Rng rng(seed);
  const Subset empty(params.ground());
  if (!Member(params, kind, empty)) {
    result.ok = false;
    result.violation.emplace(empty, empty);
    return result;
  }
  for (std::int64_t s = 0; s < samples; ++s) {
    const Subset x = RandomMember(params, kind, rng);
    Subset sub(params.ground());
    x.ForEach([&](std::int64_t e) {
      if (rng.Coin()) sub.Insert(e);
    });
    ++result.pairs_checked;
    if (!Member(params, kind, sub)) {
      result.ok = false;
      result.violation.emplace(x, sub);
      return result;
    }
  }
  return result;
}

DownClosureResult DownClosureCheckExhaustive(const Params& params,
                                             const SystemKind& kind,
                                             std::int64_t budget) {
  DownClosureResult result;
  auto check_member = [&](const Subset& x) {
    if (!result.ok) return;
    ForEachSubsetOf(
        x,
        [&](const Subset& sub) {
          if (!result.ok) return;
          ++result.pairs_checked;
          if (!Member(params, kind, sub)) {
            result.ok = false;
            result.violation.emplace(x, sub);
          }
        },
        budget);
  };
  if (const auto* explicit_system = std::get_if<ExplicitSystem>(&kind)) {
    const Subset empty(params.ground());
    if (!Member(params, kind, empty)) {
      result.ok = false;
      result.violation.emplace(empty, empty);
      return result;
    }
    for (const Subset& x : explicit_system->members) check_member(x);
    return result;
  }
  ForEachSubset(
      params.ground(),
      [&](const Subset& x) {
        if (Member(params, kind, x)) check_member(x);
      },
      budget);
  return result;
}

}  // namespace indsys
