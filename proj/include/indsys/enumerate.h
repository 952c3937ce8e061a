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

#ifndef INDSYS_ENUMERATE_H_
#define INDSYS_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "indsys/big_count.h"
#include "indsys/subset.h"

namespace indsys {

inline constexpr std::int64_t kDefaultEnumerationBudget = 100'000'000;

// |S_{y1,y2}| = C(m,y1) * C(m,y2).
BigCount LevelSize(const GroundSet& ground, std::int64_t y1, std::int64_t y2);

// Streams every subset at level (y1, y2) exactly once, in increasing
// subset order (see Subset). The constructor throws
// EnumerationTooLargeError when the level has more than `budget` members and
// LevelError when a level component is outside [0, m].
//
//   LevelEnumerator it(ground, 2, 1);
//   Subset x(ground);
//   while (it.Next(x)) { ... }
class LevelEnumerator {
 public:
  LevelEnumerator(const GroundSet& ground, std::int64_t y1, std::int64_t y2,
                  std::int64_t budget = kDefaultEnumerationBudget);

  // Writes the next subset into `out`; false once the stream is exhausted.
  bool Next(Subset& out);

  // Number of subsets the stream yields in total.
  std::int64_t count() const { return count_; }

 private:
  GroundSet ground_;
  std::int64_t y1_;
  std::int64_t y2_;
  std::int64_t count_;
  // Positions (0-based within the block) of the current combinations.
  std::vector<std::int64_t> first_;
  std::vector<std::int64_t> second_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Subset> EnumerateLevel(
    const GroundSet& ground, std::int64_t y1, std::int64_t y2,
    std::int64_t budget = kDefaultEnumerationBudget);

// Calls fn on every subset of the ground set in increasing order. Throws
// EnumerationTooLargeError when 2^n exceeds `budget`.
void ForEachSubset(const GroundSet& ground,
                   const std::function<void(const Subset&)>& fn,
                   std::int64_t budget = kDefaultEnumerationBudget);

// Calls fn on every subset of `x` (including the empty set and x itself).
// Throws EnumerationTooLargeError when 2^|x| exceeds `budget`.
void ForEachSubsetOf(const Subset& x,
                     const std::function<void(const Subset&)>& fn,
                     std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace indsys

#endif  // INDSYS_ENUMERATE_H_
