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

#include "indsys/verify_suite.h"

#include <set>
#include <sstream>

#include "indsys/claim.h"
#include "indsys/duel.h"
#include "indsys/enumerate.h"
#include "indsys/hidden.h"
#include "indsys/image.h"
#include "indsys/objective.h"
#include "indsys/oracle.h"
#include "indsys/random.h"
#include "indsys/system.h"

namespace indsys {
namespace {

// Power-set walks above this size are replaced by sampling.
constexpr std::int64_t kExhaustiveClosureMaxN = 16;

WeightVector RandomQuery(const Params& params, Rng& rng, std::int64_t bound) {
  WeightVector c(static_cast<std::size_t>(params.n()));
  for (auto& v : c) v = rng.Uniform(-bound, bound);
  return c;
}

Subset RandomSubset(const Params& params, Rng& rng) {
  Subset x(params.ground());
  for (std::int64_t e = 1; e <= params.n(); ++e) {
    if (rng.Coin()) x.Insert(e);
  }
  return x;
}

// Up to `count` hidden sets: the first one of the level and random others.
std::vector<Subset> SampleHidden(const Params& params, Rng& rng,
                                 std::int64_t count) {
  const std::int64_t target = params.k() + params.l();
  std::vector<Subset> level = EnumerateLevel(params.ground(), target, target);
  std::vector<Subset> out = {level.front()};
  while (static_cast<std::int64_t>(out.size()) < count &&
         static_cast<std::int64_t>(out.size()) <
             static_cast<std::int64_t>(level.size())) {
    out.push_back(level[static_cast<std::size_t>(
        rng.Uniform(0, static_cast<std::int64_t>(level.size()) - 1))]);
  }
  return out;
}

std::vector<Subset> Members(const Params& params, const SystemKind& kind) {
  std::vector<Subset> out;
  ForEachSubset(params.ground(), [&](const Subset& x) {
    if (Member(params, kind, x)) out.push_back(x);
  });
  return out;
}

SuiteCheck CheckClosure(const Params& params, const std::vector<Subset>& ys,
                        const SuiteOptions& options) {
  SuiteCheck check{"independence_system", false, ""};
  std::vector<SystemKind> kinds = {MakeStarSystem()};
  for (const Subset& y : ys) kinds.push_back(MakeHiddenSystem(params, y));
  std::int64_t pairs = 0;
  for (const SystemKind& kind : kinds) {
    const DownClosureResult r =
        params.n() <= kExhaustiveClosureMaxN
            ? DownClosureCheckExhaustive(params, kind)
            : DownClosureCheck(params, kind, options.closure_samples,
                               options.seed);
    pairs += r.pairs_checked;
    if (!r.ok) {
      check.detail = KindName(kind) + " not down-closed: " +
                     r.violation->first.ToString() + " contains non-member " +
                     r.violation->second.ToString();
      return check;
    }
  }
  check.pass = true;
  check.detail = std::to_string(kinds.size()) + " systems, " +
                 std::to_string(pairs) + " (member, subset) pairs";
  return check;
}

SuiteCheck CheckOracle(const Params& params, const std::vector<Subset>& ys,
                       const SuiteOptions& options) {
  SuiteCheck check{"oracle_matches_scan", false, ""};
  Rng rng(options.seed);
  std::vector<std::pair<SystemKind, SystemKind>> systems;
  systems.emplace_back(MakeStarSystem(),
                       MakeExplicitSystem(Members(params, MakeStarSystem())));
  for (const Subset& y : ys) {
    const SystemKind hidden = MakeHiddenSystem(params, y);
    systems.emplace_back(hidden, MakeExplicitSystem(Members(params, hidden)));
  }
  for (std::int64_t q = 0; q < options.random_queries; ++q) {
    const WeightVector c = RandomQuery(params, rng, 5);
    for (const auto& [kind, scan] : systems) {
      const OptResult fast = LinOpt(params, kind, c);
      const OptResult slow = LinOpt(params, scan, c);
      if (fast.value != slow.value || !(fast.witness == slow.witness) ||
          !Member(params, kind, fast.witness) ||
          fast.witness.Dot(c) != fast.value) {
        check.detail = KindName(kind) + " disagrees with scan on query " +
                       std::to_string(q + 1);
        return check;
      }
    }
  }
  check.pass = true;
  check.detail = std::to_string(options.random_queries) + " queries x " +
                 std::to_string(systems.size()) + " systems";
  return check;
}

SuiteCheck CheckImages(const Params& params, const std::vector<Subset>& ys) {
  SuiteCheck check{"image_formulas", false, ""};
  std::vector<SystemKind> kinds = {MakeStarSystem()};
  for (const Subset& y : ys) kinds.push_back(MakeHiddenSystem(params, y));
  for (const SystemKind& kind : kinds) {
    if (EnumeratedImage(params, kind) != ClosedFormImage(params, kind)) {
      check.detail = "image of " + KindName(kind) + " differs";
      return check;
    }
  }
  check.pass = true;
  check.detail = std::to_string(kinds.size()) + " systems";
  return check;
}

SuiteCheck CheckValueRange(const Params& params, const Subset& y) {
  SuiteCheck check{"f_value_range", false, ""};
  const Image star = EnumeratedImage(params, MakeStarSystem());
  const Image hidden = EnumeratedImage(params, MakeHiddenSystem(params, y));
  std::set<std::int64_t> values;
  for (const ImagePoint& p : hidden) {
    if (!star.count(p)) values.insert(EvalF(params, p));
  }
  std::set<std::int64_t> expected;
  for (std::int64_t v = 1; v <= params.l() * params.l(); ++v) {
    expected.insert(-v);
  }
  check.pass = values == expected;
  check.detail = std::to_string(values.size()) + " distinct values, expected " +
                 std::to_string(expected.size());
  return check;
}

SuiteCheck CheckClaim(const Params& params, const SuiteOptions& options) {
  SuiteCheck check{"tset_claim", false, ""};
  Rng rng(options.seed + 1);
  const BigCount cap = TSetSizeBound(params);
  std::int64_t tsets = 0;
  std::int64_t nonempty = 0;
  for (std::int64_t q = 0; q < options.claim_queries; ++q) {
    const WeightVector c = RandomQuery(params, rng, 5);
    for (const TSet& t : ComputeAllTSets(params, c)) {
      ++tsets;
      if (t.size() > 0) ++nonempty;
      const std::string where = "query " + std::to_string(q + 1) + " T(" +
                                std::to_string(t.i1) + "," +
                                std::to_string(t.i2) + ")";
      if (!CheckCrossIntersecting(params, t).ok) {
        check.detail = where + " is not cross-intersecting";
        return check;
      }
      if (!FranklRatioCheck(params, t).verdict) {
        check.detail = where + " violates the Frankl ratio bound";
        return check;
      }
      if (Compare(BigCount::Exact(t.size()), cap) > 0) {
        check.detail = where + " exceeds C(m,l) C(m,k+l)";
        return check;
      }
    }
  }
  check.pass = true;
  check.detail = std::to_string(tsets) + " T-sets (" +
                 std::to_string(nonempty) + " nonempty)";
  return check;
}

SuiteCheck CheckSupersets(const Params& params) {
  SuiteCheck check{"superset_counting", false, ""};
  const std::int64_t target = params.k() + params.l();
  const std::vector<Subset> hidden =
      EnumerateLevel(params.ground(), target, target);
  std::int64_t checked = 0;
  for (std::int64_t i1 = 1; i1 <= params.l(); ++i1) {
    for (std::int64_t i2 = 1; i2 <= params.l(); ++i2) {
      LevelEnumerator it(params.ground(), params.k() + i1, params.k() + i2);
      Subset z(params.ground());
      while (it.Next(z)) {
        std::int64_t brute = 0;
        for (const Subset& y : hidden) brute += z.IsSubsetOf(y) ? 1 : 0;
        const SupersetCount counted = CountSupersets(params, z);
        if (Compare(counted.count, BigCount::Exact(brute)) != 0 ||
            !counted.within_bound) {
          check.detail = "Z = " + z.ToString() + ": formula " +
                         counted.count.ToString() + ", enumeration " +
                         std::to_string(brute);
          return check;
        }
        ++checked;
      }
    }
  }
  check.pass = true;
  check.detail = std::to_string(checked) + " eligible Z";
  return check;
}

SuiteCheck CheckExchange(const Params& params, const SuiteOptions& options) {
  SuiteCheck check{"exchange_identity", false, ""};
  Rng rng(options.seed + 2);
  for (std::int64_t t = 0; t < options.exchange_triples; ++t) {
    const Subset u = RandomSubset(params, rng);
    const Subset v = RandomSubset(params, rng);
    const WeightVector c = RandomQuery(params, rng, 1000);
    if (!ExchangeWitness(params, u, v, c).identity_holds) {
      check.detail = "identity fails for U = " + u.ToString() +
                     ", V = " + v.ToString();
      return check;
    }
  }
  check.pass = true;
  check.detail = std::to_string(options.exchange_triples) + " triples";
  return check;
}

SuiteCheck CheckDuels(const Params& params, const SuiteOptions& options) {
  SuiteCheck check{"indistinguishability", false, ""};
  std::ostringstream detail;
  for (const std::string& id : BaselineIds()) {
    const DuelReport report =
        RunDuel(params, id, options.duel_budget, options.seed);
    detail << id << '=' << ToString(report.adjudication) << ' ';
    if (report.adjudication != Adjudication::kIndistinguishable) continue;
    if (!report.transcript_verified || report.proposal_value != 0 ||
        !report.star_verdict.pass || !report.hidden_verdict ||
        report.hidden_verdict->pass) {
      check.detail = id + ": indistinguishable duel without the value gap";
      return check;
    }
  }
  check.pass = true;
  check.detail = detail.str();
  if (!check.detail.empty()) check.detail.pop_back();
  return check;
}

}  // namespace

std::vector<SuiteCheck> RunVerifySuite(const Params& params,
                                       const SuiteOptions& options) {
  Rng rng(options.seed);
  const std::vector<Subset> ys =
      SampleHidden(params, rng, options.hidden_samples);
  return {
      CheckClosure(params, ys, options),
      CheckOracle(params, ys, options),
      CheckImages(params, ys),
      CheckValueRange(params, ys.front()),
      CheckClaim(params, options),
      CheckSupersets(params),
      CheckExchange(params, options),
      CheckDuels(params, options),
  };
}

std::string FormatSuiteCheck(const SuiteCheck& check) {
  return std::string(check.pass ? "[PASS] " : "[FAIL] ") + check.name + ": " +
         check.detail;
}

}  // namespace indsys
