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

#ifndef INDSYS_SUBSET_H_
#define INDSYS_SUBSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace indsys {

// The ground set N = {1..n} with its natural equipartition N1 = {1..m},
// N2 = {m+1..2m}. Only m is stored; n is always 2m.
class GroundSet {
 public:
  // Throws ParameterError unless m >= 1.
  explicit GroundSet(std::int64_t m);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return 2 * m_; }

  // Block (1 or 2) holding element e; e must be in {1..n}.
  int BlockOf(std::int64_t e) const { return e <= m_ ? 1 : 2; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::int64_t m_;
};

// (|X ∩ N1|, |X ∩ N2|).
struct Level {
  std::int64_t y1 = 0;
  std::int64_t y2 = 0;

  friend auto operator<=>(const Level&, const Level&) = default;
};

std::string ToString(const Level& level);

// A subset X of the ground set. Element i (1-based) lives in bit i-1.
//
// Subsets are totally ordered by the integer their membership bits spell,
// element n being the most significant bit. This is the "lexicographic"
// order used for enumeration and for every tie-break in the library; note
// that removing elements always makes a subset smaller.
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  // The empty subset of `ground`.
  explicit Subset(const GroundSet& ground);

  // Throws InvalidSubsetError if some element is outside {1..n}.
  static Subset FromElements(const GroundSet& ground,
                             std::span<const std::int64_t> elements);
  static Subset FromElements(const GroundSet& ground,
                             std::initializer_list<std::int64_t> elements);
  // Elements lo..hi inclusive.
  static Subset Range(const GroundSet& ground, std::int64_t lo,
                      std::int64_t hi);
  static Subset Full(const GroundSet& ground);
  // Bit i-1 of `mask` is element i. Requires n <= 64.
  static Subset FromMask(const GroundSet& ground, std::uint64_t mask);

  const GroundSet& ground() const { return ground_; }
  std::int64_t m() const { return ground_.m(); }
  std::int64_t n() const { return ground_.n(); }

  bool Contains(std::int64_t e) const;
  void Insert(std::int64_t e);
  void Erase(std::int64_t e);

  std::int64_t size() const { return level_.y1 + level_.y2; }
  bool empty() const { return size() == 0; }
  const Level& level() const { return level_; }

  // Sorted ascending.
  std::vector<std::int64_t> Elements() const;
  // Calls fn(e) for each element in ascending order.
  void ForEach(const std::function<void(std::int64_t)>& fn) const;

  // X ∩ N1 and X ∩ N2, still over the full ground set.
  Subset Block1() const;
  Subset Block2() const;

  bool IsSubsetOf(const Subset& other) const;

  // Only valid when n <= 64.
  std::uint64_t mask() const;

  // Sum of c_i over i in X. `c` has length n, c[0] is element 1.
  std::int64_t Dot(std::span<const std::int64_t> c) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ground_ == b.ground_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  // "{1,2,5}".
  std::string ToString() const;

  std::size_t Hash() const;

 private:
  void CheckCompatible(const Subset& other) const;
  void RecomputeLevel();

  GroundSet ground_;
  boost::container::small_vector<Word, 2> words_;
  Level level_;
};

// (|X ∩ N1|, |X ∩ N2|). Throws InvalidSubsetError when X is over a
// different ground set.
Level LevelOf(const Subset& x, const GroundSet& ground);

}  // namespace indsys

template <>
struct std::hash<indsys::Subset> {
  std::size_t operator()(const indsys::Subset& s) const { return s.Hash(); }
};

#endif  // INDSYS_SUBSET_H_
