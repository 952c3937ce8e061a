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

#include "indsys/bounds.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "indsys/errors.h"
#include "indsys/params.h"

namespace indsys {
namespace {

BigRational Pow(const BigRational& base, std::int64_t exponent) {
  BigRational result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

int CompareExact(const BigRational& a, const BigRational& b) {
  return a < b ? -1 : (a > b ? 1 : 0);
}

std::string Log2Text(long double v) {
  if (std::isinf(v)) return v < 0 ? "0" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "2^%.9Lg", v);
  return buf;
}

std::int64_t ISqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Quantity Quantity::Exact(BigRational value) {
  if (value < 0) throw std::invalid_argument("Quantity must be non-negative");
  Quantity q;
  q.log2_ = Log2Of(value);
  q.exact_ = std::move(value);
  return q;
}

Quantity Quantity::Exact(const BigCount& count) {
  if (!count.is_exact()) return FromLog2(count.Log2());
  return Exact(BigRational(count.exact_value()));
}

Quantity Quantity::FromLog2(long double log2_value) {
  Quantity q;
  q.log2_ = log2_value;
  return q;
}

std::string ToString(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kLess:
      return "<";
    case Relation::kEqual:
      return "==";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kGreater:
      return ">";
  }
  return "?";
}

BoundReport MakeReport(std::string name, std::string statement,
                       const Quantity& lhs, Relation relation,
                       const Quantity& rhs) {
  BoundReport r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.relation = relation;
  r.lhs = lhs;
  r.rhs = rhs;
  r.exact = lhs.is_exact() && rhs.is_exact();

  const long double x = lhs.Log2();
  const long double y = rhs.Log2();
  switch (relation) {
    case Relation::kLessEqual:
    case Relation::kLess:
      r.slack_log2 = y - x;
      break;
    case Relation::kGreaterEqual:
    case Relation::kGreater:
      r.slack_log2 = x - y;
      break;
    case Relation::kEqual:
      r.slack_log2 = -std::fabs(x - y);
      break;
  }
  // NaN when both sides are zero; -0 for exact equality.
  if (std::isnan(r.slack_log2) || r.slack_log2 == 0) r.slack_log2 = 0;

  int cmp;
  if (r.exact) {
    cmp = CompareExact(*lhs.exact(), *rhs.exact());
  } else if (std::isinf(x) || std::isinf(y)) {
    cmp = (x > y) - (x < y);
  } else {
    const long double tol =
        kLog2RelativeTolerance * std::max({1.0L, std::fabs(x), std::fabs(y)});
    cmp = std::fabs(x - y) <= tol ? 0 : (x < y ? -1 : 1);
  }
  switch (relation) {
    case Relation::kLessEqual:
      r.verdict = cmp <= 0;
      break;
    case Relation::kLess:
      r.verdict = cmp < 0;
      break;
    case Relation::kEqual:
      r.verdict = cmp == 0;
      break;
    case Relation::kGreaterEqual:
      r.verdict = cmp >= 0;
      break;
    case Relation::kGreater:
      r.verdict = cmp > 0;
      break;
  }
  return r;
}

std::string FormatReportText(const BoundReport& report) {
  std::string out = report.verdict ? "[PASS] " : "[FAIL] ";
  out += report.name + ": " + report.statement;
  out += "  lhs=" + Log2Text(report.lhs.Log2());
  out += " rhs=" + Log2Text(report.rhs.Log2());
  char buf[64];
  std::snprintf(buf, sizeof(buf), " slack_log2=%.6Lg", report.slack_log2);
  out += buf;
  out += report.exact ? " (exact)" : " (log2)";
  if (report.needs_large_l && !report.hypothesis_met) {
    out += " [needs l >= 2^10]";
  }
  return out;
}

std::string FormatReportRecord(const BoundReport& report) {
  auto finite = [](long double v) -> nlohmann::json {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    return static_cast<double>(v);
  };
  nlohmann::json j;
  j["name"] = report.name;
  j["statement"] = report.statement;
  j["relation"] = ToString(report.relation);
  j["lhs_log2"] = finite(report.lhs.Log2());
  j["rhs_log2"] = finite(report.rhs.Log2());
  j["verdict"] = report.verdict;
  j["slack_log2"] = finite(report.slack_log2);
  j["exact"] = report.exact;
  j["needs_large_l"] = report.needs_large_l;
  j["hypothesis_met"] = report.hypothesis_met;
  return j.dump();
}

long double QueryLowerBoundLog2(std::int64_t l) {
  const long double lg = std::log2(static_cast<long double>(l));
  return 2.0L * l * (lg - 9.0L) - 2.0L * lg;
}

std::vector<BoundReport> VerifyBoundChain(std::int64_t l,
                                          ChainArithmetic arithmetic) {
  if (l < 2) throw ParameterError("bound chain requires l >= 2");
  const Params p = MakePaperParams(l);
  const std::int64_t k = p.k();
  const std::int64_t m = p.m();
  const std::int64_t n = p.n();
  const bool exact = arithmetic == ChainArithmetic::kAuto
                         ? l <= kExactChainMaxL
                         : arithmetic == ChainArithmetic::kExact;

  // Binomials and powers shared by several links.
  auto binom = [&](std::int64_t a, std::int64_t b) {
    return exact ? Quantity::Exact(BigRational(BinomExact(a, b)))
                 : Quantity::FromLog2(Log2Binom(a, b));
  };
  auto product = [&](std::initializer_list<std::pair<Quantity, long double>>
                         factors) {
    // Product of factor^power for integer powers (may be negative).
    if (exact) {
      BigRational acc = 1;
      for (const auto& [q, power] : factors) {
        const auto e = static_cast<std::int64_t>(power);
        const BigRational f = Pow(*q.exact(), e < 0 ? -e : e);
        if (e < 0) {
          acc /= f;
        } else {
          acc *= f;
        }
      }
      return Quantity::Exact(acc);
    }
    long double acc = 0;
    for (const auto& [q, power] : factors) acc += power * q.Log2();
    return Quantity::FromLog2(acc);
  };
  auto rational = [&](std::int64_t num, std::int64_t den) {
    return exact ? Quantity::Exact(BigRational(num, den))
                 : Quantity::FromLog2(std::log2(static_cast<long double>(num)) -
                                      std::log2(static_cast<long double>(den)));
  };

  const Quantity c_m_kl = binom(m, k + l);
  const Quantity c_m_l = binom(m, l);
  const Quantity c_head = binom(m - k - 1, l - 1);
  // (2^-9 l)^{2l}
  const Quantity base_pow = product({{rational(l, 512), 2.0L * l}});
  const Quantity ratio = product({{c_m_kl, 1}, {c_m_l, -3}});
  const Quantity estimate =
      product({{rational(4 * l * l, 8 * l), 8.0L * l},
               {rational(8 * l * l, 1), -3.0L * l}});
  const Quantity q_min = product({{base_pow, 1}, {rational(l, 1), -2}});
  const Quantity weak_q = product({{rational(2, 1), 2.0L * l},
                                   {rational(l, 1), -2}});
  const Quantity two_pow_l = product({{rational(2, 1), static_cast<long double>(l)}});

  std::vector<BoundReport> out;
  out.push_back(MakeReport(
      "ratio_estimate", "C(m,k+l)/C(m,l)^3 >= (4l^2/8l)^{8l}/(8l^2)^{3l}",
      ratio, Relation::kGreaterEqual, estimate));
  out.push_back(MakeReport("ratio_simplified",
                           "(4l^2/8l)^{8l}/(8l^2)^{3l} >= (2^-9 l)^{2l}",
                           estimate, Relation::kGreaterEqual, base_pow));
  out.push_back(MakeReport(
      "level_size", "C(m,k+l)^2 >= (2^-9 l)^{2l} C(m,l)^3 C(m,k+l)",
      product({{c_m_kl, 2}}), Relation::kGreaterEqual,
      product({{base_pow, 1}, {c_m_l, 3}, {c_m_kl, 1}})));

  // C(m,k+i) grows with i <= l and C(m-k-1,i-1) grows with i <= l when both
  // lower indices stay at or below half of the upper index.
  out.push_back(MakeReport("monotone_level_binomial", "2(k+l) <= m",
                           rational(2 * (k + l), 1), Relation::kLessEqual,
                           rational(m, 1)));
  out.push_back(MakeReport("monotone_head_binomial", "2(l-1) <= m-k-1",
                           rational(2 * (l - 1), 1),
                           Relation::kLessEqual, rational(m - k - 1, 1)));
  out.push_back(MakeReport(
      "claim_conclusion", "C(m-k-1,l-1) C(m,k+l) <= C(m,l) C(m,k+l)",
      product({{c_head, 1}, {c_m_kl, 1}}), Relation::kLessEqual,
      product({{c_m_l, 1}, {c_m_kl, 1}})));
  out.push_back(MakeReport("superset_count",
                           "C(m-(k+1),l-1)^2 <= C(m,l)^2",
                           product({{c_head, 2}}), Relation::kLessEqual,
                           product({{c_m_l, 2}})));

  BoundReport exponential = MakeReport(
      "query_bound_exponential", "l^-2 (2^-9 l)^{2l} >= l^-2 2^{2l}", q_min,
      Relation::kGreaterEqual, weak_q);
  exponential.needs_large_l = true;
  exponential.hypothesis_met = l >= kPaperMinL;
  out.push_back(exponential);

  out.push_back(MakeReport("query_bound_beats_2^l", "l^-2 2^{2l} > 2^l",
                           weak_q, Relation::kGreater, two_pow_l));

  const std::int64_t root = ISqrt(n);
  const Quantity quarter_root =
      root * root == n
          ? Quantity::Exact(BigRational(root, 4))
          : Quantity::FromLog2(std::log2(std::sqrt(static_cast<long double>(n)) / 4));
  out.push_back(MakeReport("sqrt_identity", "(1/4) sqrt(n) == l with n = 16 l^2",
                           quarter_root, Relation::kEqual,
                           Quantity::Exact(BigRational(l))));

  BoundReport headline = MakeReport(
      "query_lower_bound", "l^-2 (2^-9 l)^{2l} >= 2^l = 2^{(1/4) sqrt(n)}",
      q_min, Relation::kGreaterEqual, two_pow_l);
  headline.needs_large_l = true;
  headline.hypothesis_met = l >= kPaperMinL;
  out.push_back(headline);
  return out;
}

}  // namespace indsys
