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

#ifndef INDSYS_BOUNDS_H_
#define INDSYS_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indsys/big_count.h"

namespace indsys {

// A non-negative real held either as an exact rational or as log2.
class Quantity {
 public:
  static Quantity Exact(BigRational value);
  static Quantity Exact(const BigCount& count);
  static Quantity FromLog2(long double log2_value);

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<BigRational>& exact() const { return exact_; }
  long double Log2() const { return log2_; }

 private:
  std::optional<BigRational> exact_;
  long double log2_ = 0;
};

enum class Relation { kLessEqual, kLess, kEqual, kGreaterEqual, kGreater };

std::string ToString(Relation relation);

// Verdict on one inequality "lhs <relation> rhs". Exact comparison when both
// sides are exact; otherwise on log2 values with tolerance
// kLog2RelativeTolerance * max(1, |lhs|, |rhs|). Strict relations need the
// gap to exceed the tolerance.
struct BoundReport {
  std::string name;
  std::string statement;
  Relation relation = Relation::kLessEqual;
  Quantity lhs = Quantity::FromLog2(0);
  Quantity rhs = Quantity::FromLog2(0);
  bool exact = false;
  bool verdict = false;
  // Signed log2 margin, positive when the relation holds with room
  // (rhs - lhs for <=, <; lhs - rhs for >=, >; -|lhs - rhs| for =).
  long double slack_log2 = 0;
  // The link is only claimed for l >= 2^10.
  bool needs_large_l = false;
  // False when needs_large_l and the instance is below the threshold.
  bool hypothesis_met = true;
};

BoundReport MakeReport(std::string name, std::string statement,
                       const Quantity& lhs, Relation relation,
                       const Quantity& rhs);

// "[PASS] name: statement  lhs=2^.. rhs=2^.. slack=.."
std::string FormatReportText(const BoundReport& report);
// One JSON object: name, statement, relation, lhs_log2, rhs_log2, verdict,
// slack_log2, exact, needs_large_l, hypothesis_met.
std::string FormatReportRecord(const BoundReport& report);

// Up to this l the chain is evaluated with exact rationals by default.
inline constexpr std::int64_t kExactChainMaxL = 32;

enum class ChainArithmetic { kAuto, kExact, kLog2 };

// Evaluates every link of the counting argument for k = 7l, m = 8l^2,
// n = 2m. Requires l >= 2. kAuto is exact up to kExactChainMaxL.
std::vector<BoundReport> VerifyBoundChain(
    std::int64_t l, ChainArithmetic arithmetic = ChainArithmetic::kAuto);

// log2 of the query lower bound l^-2 (2^-9 l)^{2l}.
long double QueryLowerBoundLog2(std::int64_t l);

}  // namespace indsys

#endif  // INDSYS_BOUNDS_H_
