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

#include "indsys/subset.h"

#include <bit>
#include <sstream>

#include "indsys/errors.h"

namespace indsys {
namespace {

std::size_t WordsFor(std::int64_t n) {
  return static_cast<std::size_t>((n + Subset::kWordBits - 1) /
                                  Subset::kWordBits);
}

// Popcount of bits [0, limit) of `words`.
std::int64_t PopcountBelow(std::span<const Subset::Word> words,
                           std::int64_t limit) {
  std::int64_t count = 0;
  const std::int64_t full = limit / Subset::kWordBits;
  for (std::int64_t w = 0; w < full; ++w) count += std::popcount(words[w]);
  const int rest = static_cast<int>(limit % Subset::kWordBits);
  if (rest != 0) {
    count += std::popcount(words[full] & ((Subset::Word{1} << rest) - 1));
  }
  return count;
}

}  // namespace

GroundSet::GroundSet(std::int64_t m) : m_(m) {
  if (m < 1) {
    throw ParameterError("ground set requires m >= 1, got m = " +
                         std::to_string(m));
  }
}

std::string ToString(const Level& level) {
  return "(" + std::to_string(level.y1) + "," + std::to_string(level.y2) + ")";
}

Subset::Subset(const GroundSet& ground)
    : ground_(ground), words_(WordsFor(ground.n()), 0) {}

Subset Subset::FromElements(const GroundSet& ground,
                            std::span<const std::int64_t> elements) {
  Subset s(ground);
  for (std::int64_t e : elements) s.Insert(e);
  return s;
}

Subset Subset::FromElements(const GroundSet& ground,
                            std::initializer_list<std::int64_t> elements) {
  return FromElements(ground, std::span<const std::int64_t>(
                                  elements.begin(), elements.size()));
}

Subset Subset::Range(const GroundSet& ground, std::int64_t lo,
                     std::int64_t hi) {
  Subset s(ground);
  for (std::int64_t e = lo; e <= hi; ++e) s.Insert(e);
  return s;
}

Subset Subset::Full(const GroundSet& ground) {
  return Range(ground, 1, ground.n());
}

Subset Subset::FromMask(const GroundSet& ground, std::uint64_t mask) {
  if (ground.n() > kWordBits) {
    throw InvalidSubsetError("FromMask requires n <= 64");
  }
  if (ground.n() < kWordBits && (mask >> ground.n()) != 0) {
    throw InvalidSubsetError("mask has bits beyond n = " +
                             std::to_string(ground.n()));
  }
  Subset s(ground);
  s.words_[0] = mask;
  s.RecomputeLevel();
  return s;
}

bool Subset::Contains(std::int64_t e) const {
  if (e < 1 || e > n()) return false;
  const std::int64_t bit = e - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1;
}

void Subset::Insert(std::int64_t e) {
  if (e < 1 || e > n()) {
    throw InvalidSubsetError("element " + std::to_string(e) +
                             " outside ground set {1.." + std::to_string(n()) +
                             "}");
  }
  if (Contains(e)) return;
  const std::int64_t bit = e - 1;
  words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
  (e <= m() ? level_.y1 : level_.y2) += 1;
}

void Subset::Erase(std::int64_t e) {
  if (!Contains(e)) return;
  const std::int64_t bit = e - 1;
  words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
  (e <= m() ? level_.y1 : level_.y2) -= 1;
}

std::vector<std::int64_t> Subset::Elements() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(size()));
  ForEach([&out](std::int64_t e) { out.push_back(e); });
  return out;
}

void Subset::ForEach(const std::function<void(std::int64_t)>& fn) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      fn(static_cast<std::int64_t>(w) * kWordBits + b + 1);
      bits &= bits - 1;
    }
  }
}

Subset Subset::Block1() const {
  Subset out(ground_);
  const std::int64_t full = m() / kWordBits;
  for (std::int64_t w = 0; w < full; ++w) out.words_[w] = words_[w];
  const int rest = static_cast<int>(m() % kWordBits);
  if (rest != 0) out.words_[full] = words_[full] & ((Word{1} << rest) - 1);
  out.level_ = {level_.y1, 0};
  return out;
}

Subset Subset::Block2() const {
  Subset out = *this;
  out -= Block1();
  return out;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::uint64_t Subset::mask() const {
  if (words_.size() != 1) {
    throw InvalidSubsetError("mask() requires n <= 64");
  }
  return words_[0];
}

std::int64_t Subset::Dot(std::span<const std::int64_t> c) const {
  if (static_cast<std::int64_t>(c.size()) != n()) {
    throw QueryError("weight vector has length " + std::to_string(c.size()) +
                     ", expected n = " + std::to_string(n()));
  }
  std::int64_t sum = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      sum += c[w * kWordBits + std::countr_zero(bits)];
      bits &= bits - 1;
    }
  }
  return sum;
}

Subset& Subset::operator|=(const Subset& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  RecomputeLevel();
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  RecomputeLevel();
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  CheckCompatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= ~other.words_[w];
  }
  RecomputeLevel();
  return *this;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.m() <=> b.m(); c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Subset::ToString() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  ForEach([&](std::int64_t e) {
    if (!first) out << ',';
    out << e;
    first = false;
  });
  out << '}';
  return out.str();
}

std::size_t Subset::Hash() const {
  std::size_t h = std::hash<std::int64_t>()(m());
  for (Word w : words_) {
    h ^= std::hash<Word>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Subset::CheckCompatible(const Subset& other) const {
  if (!(ground_ == other.ground_)) {
    throw InvalidSubsetError("subsets over different ground sets (m = " +
                             std::to_string(m()) + " vs " +
                             std::to_string(other.m()) + ")");
  }
}

void Subset::RecomputeLevel() {
  const std::span<const Word> words(words_.data(), words_.size());
  const std::int64_t total = PopcountBelow(words, n());
  level_.y1 = PopcountBelow(words, m());
  level_.y2 = total - level_.y1;
}

Level LevelOf(const Subset& x, const GroundSet& ground) {
  if (!(x.ground() == ground)) {
    throw InvalidSubsetError("subset is over a ground set with m = " +
                             std::to_string(x.m()) + ", expected m = " +
                             std::to_string(ground.m()));
  }
  return x.level();
}

}  // namespace indsys
