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

#ifndef INDSYS_PARAMS_H_
#define INDSYS_PARAMS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indsys/subset.h"

namespace indsys {

// The smallest l for which the quantitative lower-bound links are claimed.
inline constexpr std::int64_t kPaperMinL = 1024;

// Largest l accepted in paper mode; keeps n = 16 l^2 inside int64.
inline constexpr std::int64_t kPaperMaxL = std::int64_t{1} << 28;

// A non-negative rational num/den in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Throws ParameterError on den <= 0 or num < 0.
  static Rational Make(std::int64_t num, std::int64_t den);
  // Parses "p/q" or "p".
  static Rational Parse(const std::string& text);
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class ParamMode { kPaper, kToy };

std::string ToString(ParamMode mode);

// Instance parameters. In paper mode k = 7l, m = 8l^2, n = 2m, rho = 1/17;
// toy mode decouples (m, k, l) subject to k, l >= 1 and k + l <= m.
class Params {
 public:
  ParamMode mode() const { return mode_; }
  std::int64_t l() const { return l_; }
  std::int64_t k() const { return k_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return 2 * m_; }
  const Rational& rho() const { return rho_; }
  GroundSet ground() const { return GroundSet(m_); }

  // floor(rho * n), the r of a "rho n-best" solution.
  std::int64_t RhoThreshold() const;

  // True when the counting links of the lower bound are claimed to hold,
  // i.e. paper mode with l >= 2^10.
  bool BoundClaimsApply() const {
    return mode_ == ParamMode::kPaper && l_ >= kPaperMinL;
  }

  // Human-readable warnings about the parameter choice (possibly empty).
  std::vector<std::string> Warnings() const;

  // "toy(m=4,k=1,l=2)" or "paper(l=1024)".
  std::string ToString() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  friend Params MakePaperParams(std::int64_t l);
  friend Params MakeToyParams(std::int64_t m, std::int64_t k, std::int64_t l,
                              Rational rho);

  ParamMode mode_ = ParamMode::kToy;
  std::int64_t l_ = 1;
  std::int64_t k_ = 1;
  std::int64_t m_ = 2;
  Rational rho_{1, 17};
};

// Throws ParameterError unless 1 <= l <= kPaperMaxL.
Params MakePaperParams(std::int64_t l);

// Throws ParameterError naming the violated constraint.
Params MakeToyParams(std::int64_t m, std::int64_t k, std::int64_t l,
                     Rational rho = Rational{1, 17});

// Instance files are "key=value" lines with keys mode, l, k, m, n, rho in
// that order. Blank lines and lines starting with '#' are ignored when
// reading. Derived keys must be consistent with the others.
std::string FormatInstance(const Params& params);
Params ParseInstance(const std::string& text);
void WriteInstanceFile(const Params& params, const std::string& path);
Params ReadInstanceFile(const std::string& path);

}  // namespace indsys

#endif  // INDSYS_PARAMS_H_
