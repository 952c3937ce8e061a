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

#include "indsys/hidden.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "indsys/claim.h"
#include "indsys/errors.h"
#include "indsys/system.h"

namespace indsys {

SupersetCount CountSupersets(const Params& params, const Subset& z) {
  const Level level = LevelOf(z, params.ground());
  const std::int64_t i1 = level.y1 - params.k();
  const std::int64_t i2 = level.y2 - params.k();
  if (i1 < 1 || i2 < 1 || i1 > params.l() || i2 > params.l()) {
    throw LevelError("superset count needs Z at level (k+i1, k+i2) with "
                     "1 <= i1, i2 <= l; got " +
                     ToString(level));
  }
  const std::int64_t m = params.m();
  const std::int64_t k = params.k();
  const std::int64_t l = params.l();
  SupersetCount out{Binom(m - (k + i1), l - i1) * Binom(m - (k + i2), l - i2),
                    Binom(m, l) * Binom(m, l)};
  out.within_bound = Compare(out.count, out.bound) <= 0;
  return out;
}

HiddenSearch SearchHiddenY(const Params& params, const QueryLog& log,
                           std::int64_t budget) {
  std::vector<Subset> blockers;
  for (const LoggedQuery& entry : log.entries()) {
    for (const TSet& t : ComputeAllTSets(params, entry.query, budget)) {
      blockers.insert(blockers.end(), t.members.begin(), t.members.end());
    }
  }
  HiddenSearch result;
  const std::int64_t target = params.k() + params.l();
  LevelEnumerator it(params.ground(), target, target, budget);
  Subset y(params.ground());
  while (it.Next(y)) {
    ++result.candidates;
    bool blocked = false;
    for (const Subset& z : blockers) {
      if (z.IsSubsetOf(y)) {
        blocked = true;
        break;
      }
    }
    if (blocked) {
      ++result.eliminated;
    } else if (!result.survivor) {
      result.survivor = y;
    }
  }
  return result;
}

std::optional<Subset> FindHiddenY(const Params& params, const QueryLog& log,
                                  std::int64_t budget) {
  return SearchHiddenY(params, log, budget).survivor;
}

bool VerifyTranscript(const Params& params, const Subset& hidden,
                      const QueryLog& log) {
  const SystemKind hidden_system = MakeHiddenSystem(params, hidden);
  for (const LoggedQuery& entry : log.entries()) {
    if (LinOpt(params, hidden_system, entry.query).value !=
        entry.answer.value) {
      return false;
    }
  }
  return true;
}

BigCount EliminatedYBound(const Params& params, std::int64_t q) {
  if (q < 0) throw ParameterError("query count must be >= 0");
  const BigCount c_m_l = Binom(params.m(), params.l());
  return BigCount::Exact(q) * BigCount::Exact(params.l() * params.l()) *
         c_m_l * c_m_l * c_m_l * Binom(params.m(), params.k() + params.l());
}

BigCount EliminatedYSumBound(const Params& params, const QueryLog& log,
                             std::int64_t budget) {
  const BigCount c_m_l = Binom(params.m(), params.l());
  BigCount total;
  for (const LoggedQuery& entry : log.entries()) {
    for (const TSet& t : ComputeAllTSets(params, entry.query, budget)) {
      total = total + c_m_l * c_m_l * BigCount::Exact(t.size());
    }
  }
  return total;
}

BigCount HiddenCandidateCount(const Params& params) {
  const BigCount c = Binom(params.m(), params.k() + params.l());
  return c * c;
}

}  // namespace indsys
