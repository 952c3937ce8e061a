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

#include "indsys/big_count.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace indsys {
namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
constexpr std::int64_t kSummationLimit = std::int64_t{1} << 22;

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void Add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + compensation_; }

 private:
  long double sum_ = 0;
  long double compensation_ = 0;
};

}  // namespace

BigCount BigCount::Exact(BigInt value) {
  if (value < 0) throw std::invalid_argument("BigCount must be non-negative");
  BigCount c;
  c.exact_ = true;
  c.value_ = std::move(value);
  return c;
}

BigCount BigCount::FromLog2(long double log2_value) {
  BigCount c;
  c.exact_ = false;
  c.log2_ = log2_value;
  return c;
}

bool BigCount::is_zero() const {
  return exact_ ? value_ == 0 : std::isinf(log2_) && log2_ < 0;
}

const BigInt& BigCount::exact_value() const {
  if (!exact_) throw std::logic_error("BigCount is in log2 mode");
  return value_;
}

long double BigCount::Log2() const {
  return exact_ ? Log2Of(value_) : log2_;
}

BigCount operator*(const BigCount& a, const BigCount& b) {
  if (a.exact_ && b.exact_) return BigCount::Exact(a.value_ * b.value_);
  if (a.is_zero() || b.is_zero()) return BigCount::FromLog2(kNegInf);
  return BigCount::FromLog2(a.Log2() + b.Log2());
}

BigCount operator+(const BigCount& a, const BigCount& b) {
  if (a.exact_ && b.exact_) return BigCount::Exact(a.value_ + b.value_);
  const long double x = a.Log2();
  const long double y = b.Log2();
  if (std::isinf(x)) return BigCount::FromLog2(y);
  if (std::isinf(y)) return BigCount::FromLog2(x);
  const long double hi = std::max(x, y);
  const long double lo = std::min(x, y);
  return BigCount::FromLog2(hi + std::log2(1.0L + std::exp2(lo - hi)));
}

std::string BigCount::ToString() const {
  if (exact_) return value_.str();
  if (is_zero()) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "2^%.6Lf", log2_);
  return buf;
}

long double Log2Of(const BigInt& value) {
  if (value <= 0) return kNegInf;
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 64) return std::log2(static_cast<long double>(value));
  // Keep the top 64 bits; the dropped tail changes log2 by < 2^-63.
  const std::size_t shift = msb - 63;
  const BigInt top = value >> shift;
  return std::log2(static_cast<long double>(top.convert_to<std::uint64_t>())) +
         static_cast<long double>(shift);
}

long double Log2Of(const BigRational& value) {
  if (value <= 0) return kNegInf;
  return Log2Of(boost::multiprecision::numerator(value)) -
         Log2Of(boost::multiprecision::denominator(value));
}

BigInt BinomExact(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binom requires a >= 0");
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= static_cast<std::uint64_t>(a - b + i);
    result /= static_cast<std::uint64_t>(i);
  }
  return result;
}

long double Log2Binom(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binom requires a >= 0");
  if (b < 0 || b > a) return kNegInf;
  b = std::min(b, a - b);
  if (b > kSummationLimit) {
    const long double ln = std::lgamma(static_cast<long double>(a) + 1) -
                           std::lgamma(static_cast<long double>(b) + 1) -
                           std::lgamma(static_cast<long double>(a - b) + 1);
    return ln / std::log(2.0L);
  }
  CompensatedSum sum;
  for (std::int64_t i = 1; i <= b; ++i) {
    sum.Add(std::log2(static_cast<long double>(a - b + i) /
                      static_cast<long double>(i)));
  }
  return sum.value();
}

BigCount Binom(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binom requires a >= 0");
  if (a <= kExactBinomLimit) return BigCount::Exact(BinomExact(a, b));
  return BigCount::FromLog2(Log2Binom(a, b));
}

int Compare(const BigCount& a, const BigCount& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = a.exact_value().compare(b.exact_value());
    return (c > 0) - (c < 0);
  }
  const long double x = a.Log2();
  const long double y = b.Log2();
  if (std::isinf(x) || std::isinf(y)) return (x > y) - (x < y);
  const long double tol =
      kLog2RelativeTolerance * std::max({1.0L, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

}  // namespace indsys
