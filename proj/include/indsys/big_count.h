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

#ifndef INDSYS_BIG_COUNT_H_
#define INDSYS_BIG_COUNT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indsys {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Relative tolerance carried by log2-mode counts.
inline constexpr double kLog2RelativeTolerance = 1e-9;

// Binom(a, b) switches to log2 mode above this a.
inline constexpr std::int64_t kExactBinomLimit = 1'000'000;

// A non-negative count that is either held exactly or as its base-2
// logarithm. Arithmetic mixing the two modes degrades to log2 mode.
class BigCount {
 public:
  BigCount() = default;  // exact zero
  static BigCount Exact(BigInt value);
  static BigCount Exact(std::int64_t value) { return Exact(BigInt(value)); }
  // log2 of the count; -infinity encodes zero.
  static BigCount FromLog2(long double log2_value);

  bool is_exact() const { return exact_; }
  bool is_zero() const;
  // Throws std::logic_error in log2 mode.
  const BigInt& exact_value() const;
  long double Log2() const;

  BigCount ToLog2Mode() const { return FromLog2(Log2()); }

  friend BigCount operator*(const BigCount& a, const BigCount& b);
  friend BigCount operator+(const BigCount& a, const BigCount& b);

  // Exact decimal, or "2^<log2>".
  std::string ToString() const;

 private:
  bool exact_ = true;
  BigInt value_ = 0;
  long double log2_ = 0;
};

// log2 of a positive big integer, accurate to long double precision.
long double Log2Of(const BigInt& value);
long double Log2Of(const BigRational& value);

// Exact binomial coefficient; 0 when b < 0 or b > a. Requires a >= 0.
BigInt BinomExact(std::int64_t a, std::int64_t b);

// log2 C(a, b), -infinity when the coefficient is 0. Sums
// log2((a-b+i)/i) with compensation; falls back to lgamma when
// min(b, a-b) is above 2^22.
long double Log2Binom(std::int64_t a, std::int64_t b);

// C(a, b) as a BigCount: exact for a <= kExactBinomLimit, log2 above.
BigCount Binom(std::int64_t a, std::int64_t b);

// Three-way comparison. Exact when both sides are exact, otherwise on log2
// values with the two treated as equal when they differ by at most
// kLog2RelativeTolerance * max(1, |log2|).
int Compare(const BigCount& a, const BigCount& b);

}  // namespace indsys

#endif  // INDSYS_BIG_COUNT_H_
