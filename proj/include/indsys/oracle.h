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

#ifndef INDSYS_ORACLE_H_
#define INDSYS_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indsys/enumerate.h"
#include "indsys/params.h"
#include "indsys/subset.h"
#include "indsys/system.h"

namespace indsys {

// Default bound on |c_i|. With n <= 2^33 every dot product fits in int64.
inline constexpr std::int64_t kDefaultMagnitudeCap = 2147483647;

using WeightVector = std::vector<std::int64_t>;

// Which maximization produced an oracle answer.
enum class Branch {
  // Positive elements of N1 plus the k heaviest positive elements of N2.
  kFirstBlockFull,
  // Mirror image: positive elements of N2 plus the k heaviest of N1.
  kSecondBlockFull,
  // Positive elements of the hidden set Y.
  kInsideHidden,
  // Linear scan of an explicit family.
  kExplicitScan,
};

std::string ToString(Branch branch);
// Throws FormatError on an unknown name.
Branch ParseBranch(const std::string& name);

struct OptResult {
  std::int64_t value = 0;
  Subset witness;
  Branch branch = Branch::kFirstBlockFull;

  friend bool operator==(const OptResult&, const OptResult&) = default;
};

// Throws QueryError on a length mismatch or an entry above `cap`.
void ValidateQuery(const Params& params, std::span<const std::int64_t> c,
                   std::int64_t cap = kDefaultMagnitudeCap);

// max{c X : X in system} with a witness. Among optimal members the smallest
// one in subset order is returned, so zero-weight elements never appear in
// a witness; if two branches yield the same witness the earlier branch in
// declaration order is reported.
OptResult LinOpt(const Params& params, const SystemKind& kind,
                 std::span<const std::int64_t> c,
                 std::int64_t cap = kDefaultMagnitudeCap);

struct DownClosureResult {
  bool ok = true;
  // (member, subset of it that is not a member) when !ok.
  std::optional<std::pair<Subset, Subset>> violation;
  std::int64_t pairs_checked = 0;
};

// Samples `samples` (member X, subset X' of X) pairs and checks X' is a
// member. Deterministic in `seed`.
DownClosureResult DownClosureCheck(const Params& params,
                                   const SystemKind& kind,
                                   std::int64_t samples, std::uint64_t seed);

// Checks every (member, subset) pair. For S* and S_Y this walks the whole
// power set, so 2^n must fit in `budget`.
DownClosureResult DownClosureCheckExhaustive(
    const Params& params, const SystemKind& kind,
    std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace indsys

#endif  // INDSYS_ORACLE_H_
