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

#ifndef INDSYS_DUEL_H_
#define INDSYS_DUEL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indsys/adversary.h"
#include "indsys/enumerate.h"
#include "indsys/params.h"
#include "indsys/system.h"

namespace indsys {

struct RBestVerdict {
  Subset candidate;
  std::int64_t candidate_value = 0;
  // Distinct objective values strictly below candidate_value.
  std::int64_t better_values = 0;
  std::int64_t r = 0;
  bool pass = false;
};

// Counts the distinct values f(W X) < f(W candidate) over the whole system.
// Throws MembershipError when the candidate is not a member and
// EnumerationTooLargeError when the system cannot be walked within budget.
RBestVerdict RBestVerify(const Params& params, const SystemKind& kind,
                         const Subset& candidate, std::int64_t r,
                         std::int64_t budget = kDefaultEnumerationBudget);

// min f(W X) over the system, by enumeration.
std::int64_t SystemOptimum(const Params& params, const SystemKind& kind,
                           std::int64_t budget = kDefaultEnumerationBudget);

// Black-box algorithms that only see the oracle's answers.
class Baseline {
 public:
  virtual ~Baseline() = default;
  virtual std::string name() const = 0;
  // Next query, or nullopt when the algorithm stops early.
  virtual std::optional<WeightVector> NextQuery(const QueryLog& log) = 0;
  // Proposed solution after the last query.
  virtual Subset Propose(const QueryLog& log) const;
};

// "random-query", "unit-directions", "greedy-coordinate". Throws UsageError
// for any other id.
std::unique_ptr<Baseline> MakeBaseline(const std::string& id,
                                       const Params& params,
                                       std::uint64_t seed);

std::vector<std::string> BaselineIds();

enum class Adjudication { kDistinguished, kIndistinguishable };

std::string ToString(Adjudication adjudication);

struct DuelReport {
  std::string algorithm;
  Params params;
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  std::int64_t queries_used = 0;
  QueryLog log;
  Adjudication adjudication = Adjudication::kDistinguished;
  // Surviving hidden set, when one exists.
  std::optional<Subset> hidden;
  bool transcript_verified = false;
  std::int64_t eliminated_hidden = 0;
  std::int64_t hidden_candidates = 0;

  Subset proposal;
  // f(W proposal); the proposal and its value are the same in both worlds
  // when the transcript is indistinguishable.
  std::int64_t proposal_value = 0;
  std::int64_t star_optimum = 0;
  std::optional<std::int64_t> hidden_optimum;
  // r = floor(rho n).
  std::int64_t r = 0;
  RBestVerdict star_verdict;
  std::optional<RBestVerdict> hidden_verdict;
};

// Plays the baseline against the S* adversary for at most `budget` queries,
// then looks for a surviving hidden Y and judges the proposal in both
// worlds. Deterministic in (params, algorithm, budget, seed).
DuelReport RunDuel(const Params& params, const std::string& algorithm,
                   std::int64_t budget, std::uint64_t seed);

std::string FormatDuelReport(const DuelReport& report);
// JSON document with the report fields and the full transcript.
std::string FormatDuelRecord(const DuelReport& report);

}  // namespace indsys

#endif  // INDSYS_DUEL_H_
