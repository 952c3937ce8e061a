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

#include "indsys/enumerate.h"

#include <cmath>
#include <numeric>
#include <string>

#include "indsys/errors.h"

namespace indsys {
namespace {

// Advances `pos` (strictly increasing positions in [0, size)) to the next
// combination in colex order, which is increasing bitmask order.
bool NextCombination(std::vector<std::int64_t>& pos, std::int64_t size) {
  const std::size_t r = pos.size();
  for (std::size_t j = 0; j < r; ++j) {
    const std::int64_t limit = j + 1 < r ? pos[j + 1] : size;
    if (pos[j] + 1 < limit) {
      ++pos[j];
      for (std::size_t i = 0; i < j; ++i) pos[i] = static_cast<std::int64_t>(i);
      return true;
    }
  }
  return false;
}

void ResetCombination(std::vector<std::int64_t>& pos) {
  std::iota(pos.begin(), pos.end(), std::int64_t{0});
}

std::string DescribeCount(const BigCount& count) {
  return count.ToString();
}

void CheckBudget(const BigCount& count, std::int64_t budget,
                 const std::string& what) {
  if (Compare(count, BigCount::Exact(budget)) > 0) {
    throw EnumerationTooLargeError(what + " has " + DescribeCount(count) +
                                   " members, enumeration budget is " +
                                   std::to_string(budget));
  }
}

}  // namespace

BigCount LevelSize(const GroundSet& ground, std::int64_t y1, std::int64_t y2) {
  return Binom(ground.m(), y1) * Binom(ground.m(), y2);
}

LevelEnumerator::LevelEnumerator(const GroundSet& ground, std::int64_t y1,
                                 std::int64_t y2, std::int64_t budget)
    : ground_(ground), y1_(y1), y2_(y2) {
  if (y1 < 0 || y2 < 0 || y1 > ground.m() || y2 > ground.m()) {
    throw LevelError("level " + ToString(Level{y1, y2}) +
                     " outside [0, m]^2 for m = " + std::to_string(ground.m()));
  }
  const BigCount size = LevelSize(ground, y1, y2);
  CheckBudget(size, budget, "level set S" + ToString(Level{y1, y2}));
  count_ = size.is_exact()
               ? size.exact_value().convert_to<std::int64_t>()
               : static_cast<std::int64_t>(std::llround(std::exp2(size.Log2())));
  first_.resize(static_cast<std::size_t>(y1));
  second_.resize(static_cast<std::size_t>(y2));
}

bool LevelEnumerator::Next(Subset& out) {
  if (done_) return false;
  if (!started_) {
    ResetCombination(first_);
    ResetCombination(second_);
    started_ = true;
  } else if (!NextCombination(first_, ground_.m())) {
    if (!NextCombination(second_, ground_.m())) {
      done_ = true;
      return false;
    }
    ResetCombination(first_);
  }
  out = Subset(ground_);
  for (std::int64_t p : first_) out.Insert(p + 1);
  for (std::int64_t p : second_) out.Insert(ground_.m() + p + 1);
  return true;
}

std::vector<Subset> EnumerateLevel(const GroundSet& ground, std::int64_t y1,
                                   std::int64_t y2, std::int64_t budget) {
  LevelEnumerator it(ground, y1, y2, budget);
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(it.count()));
  Subset x(ground);
  while (it.Next(x)) out.push_back(x);
  return out;
}

void ForEachSubset(const GroundSet& ground,
                   const std::function<void(const Subset&)>& fn,
                   std::int64_t budget) {
  if (ground.n() > 62 || (std::int64_t{1} << ground.n()) > budget) {
    throw EnumerationTooLargeError(
        "power set of n = " + std::to_string(ground.n()) +
        " elements has 2^" + std::to_string(ground.n()) +
        " members, enumeration budget is " + std::to_string(budget));
  }
  const std::uint64_t total = std::uint64_t{1} << ground.n();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    fn(Subset::FromMask(ground, mask));
  }
}

void ForEachSubsetOf(const Subset& x,
                     const std::function<void(const Subset&)>& fn,
                     std::int64_t budget) {
  const std::vector<std::int64_t> elems = x.Elements();
  const std::size_t r = elems.size();
  if (r > 62 || (std::int64_t{1} << r) > budget) {
    throw EnumerationTooLargeError("subset of size " + std::to_string(r) +
                                   " has 2^" + std::to_string(r) +
                                   " subsets, enumeration budget is " +
                                   std::to_string(budget));
  }
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << r); ++sel) {
    Subset s(x.ground());
    for (std::size_t i = 0; i < r; ++i) {
      if ((sel >> i) & 1) s.Insert(elems[i]);
    }
    fn(s);
  }
}

}  // namespace indsys
