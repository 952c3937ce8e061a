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

#include "indsys/duel.h"

#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "indsys/errors.h"
#include "indsys/hidden.h"
#include "indsys/objective.h"
#include "indsys/query_io.h"
#include "indsys/random.h"

namespace indsys {
namespace {

// Calls fn on every member of the system.
void ForEachMember(const Params& params, const SystemKind& kind,
                   const std::function<void(const Subset&)>& fn,
                   std::int64_t budget) {
  if (const auto* explicit_system = std::get_if<ExplicitSystem>(&kind)) {
    for (const Subset& x : explicit_system->members) fn(x);
    return;
  }
  ForEachSubset(
      params.ground(),
      [&](const Subset& x) {
        if (Member(params, kind, x)) fn(x);
      },
      budget);
}

class RandomQuery : public Baseline {
 public:
  RandomQuery(const Params& params, std::uint64_t seed)
      : n_(params.n()), rng_(seed) {}
  std::string name() const override { return "random-query"; }
  std::optional<WeightVector> NextQuery(const QueryLog&) override {
    WeightVector c(static_cast<std::size_t>(n_));
    for (auto& v : c) v = rng_.Uniform(-5, 5);
    return c;
  }

 private:
  std::int64_t n_;
  Rng rng_;
};

// The two rows of W: the indicators of N1 and of N2.
class UnitDirections : public Baseline {
 public:
  explicit UnitDirections(const Params& params) : params_(params) {}
  std::string name() const override { return "unit-directions"; }
  std::optional<WeightVector> NextQuery(const QueryLog& log) override {
    if (log.size() >= 2) return std::nullopt;
    const std::int64_t m = params_.m();
    WeightVector c(static_cast<std::size_t>(2 * m), 0);
    const std::int64_t offset = log.size() == 0 ? 0 : m;
    for (std::int64_t i = 0; i < m; ++i) c[offset + i] = 1;
    return c;
  }

 private:
  Params params_;
};

// Grows a set G one element at a time: query the indicator of G + {e} and
// keep e when the optimum equals |G| + 1, i.e. G + {e} is independent.
class GreedyCoordinate : public Baseline {
 public:
  explicit GreedyCoordinate(const Params& params) : params_(params) {}
  std::string name() const override { return "greedy-coordinate"; }
  std::optional<WeightVector> NextQuery(const QueryLog& log) override {
    const std::int64_t next = log.size() + 1;
    if (next > params_.n()) return std::nullopt;
    Subset probe = Grown(log);
    probe.Insert(next);
    WeightVector c(static_cast<std::size_t>(params_.n()), 0);
    probe.ForEach([&](std::int64_t e) { c[e - 1] = 1; });
    return c;
  }
  Subset Propose(const QueryLog& log) const override { return Grown(log); }

 private:
  Subset Grown(const QueryLog& log) const {
    Subset grown(params_.ground());
    for (std::int64_t p = 1; p <= log.size(); ++p) {
      if (log.at(p).answer.value == grown.size() + 1) grown.Insert(p);
    }
    return grown;
  }

  Params params_;
};

std::string VerdictText(const RBestVerdict& v) {
  return "value=" + std::to_string(v.candidate_value) +
         " better_values=" + std::to_string(v.better_values) +
         " r=" + std::to_string(v.r) + " rbest=" + (v.pass ? "pass" : "fail");
}

nlohmann::json VerdictJson(const RBestVerdict& v) {
  return {{"candidate", v.candidate.Elements()},
          {"candidate_value", v.candidate_value},
          {"better_values", v.better_values},
          {"r", v.r},
          {"pass", v.pass}};
}

}  // namespace

RBestVerdict RBestVerify(const Params& params, const SystemKind& kind,
                         const Subset& candidate, std::int64_t r,
                         std::int64_t budget) {
  if (!Member(params, kind, candidate)) {
    throw MembershipError("candidate " + candidate.ToString() +
                          " is not a member of " + KindName(kind));
  }
  const std::int64_t value = Objective(params, candidate);
  std::set<std::int64_t> better;
  ForEachMember(
      params, kind,
      [&](const Subset& x) {
        const std::int64_t v = Objective(params, x);
        if (v < value) better.insert(v);
      },
      budget);
  const auto count = static_cast<std::int64_t>(better.size());
  return RBestVerdict{candidate, value, count, r, count <= r};
}

std::int64_t SystemOptimum(const Params& params, const SystemKind& kind,
                           std::int64_t budget) {
  std::int64_t best = 0;
  bool any = false;
  ForEachMember(
      params, kind,
      [&](const Subset& x) {
        const std::int64_t v = Objective(params, x);
        if (!any || v < best) best = v;
        any = true;
      },
      budget);
  if (!any) throw ParameterError("system has no members");
  return best;
}

Subset Baseline::Propose(const QueryLog& log) const {
  Subset best(log.params().ground());
  std::int64_t best_value = 0;
  bool any = false;
  for (const LoggedQuery& entry : log.entries()) {
    const std::int64_t v = Objective(log.params(), entry.answer.witness);
    if (!any || v < best_value) {
      best = entry.answer.witness;
      best_value = v;
      any = true;
    }
  }
  return best;
}

std::vector<std::string> BaselineIds() {
  return {"random-query", "unit-directions", "greedy-coordinate"};
}

std::unique_ptr<Baseline> MakeBaseline(const std::string& id,
                                       const Params& params,
                                       std::uint64_t seed) {
  if (id == "random-query") return std::make_unique<RandomQuery>(params, seed);
  if (id == "unit-directions") return std::make_unique<UnitDirections>(params);
  if (id == "greedy-coordinate") {
    return std::make_unique<GreedyCoordinate>(params);
  }
  throw UsageError("unknown algorithm '" + id +
                   "' (expected random-query, unit-directions or "
                   "greedy-coordinate)");
}

std::string ToString(Adjudication adjudication) {
  return adjudication == Adjudication::kIndistinguishable ? "indistinguishable"
                                                          : "distinguished";
}

DuelReport RunDuel(const Params& params, const std::string& algorithm,
                   std::int64_t budget, std::uint64_t seed) {
  if (budget < 0) throw UsageError("budget must be >= 0");
  std::unique_ptr<Baseline> baseline = MakeBaseline(algorithm, params, seed);
  QueryLog log(params);
  while (log.size() < budget) {
    std::optional<WeightVector> c = baseline->NextQuery(log);
    if (!c) break;
    AdversaryAnswer(log, *c);
  }

  // The adversary commits to a hidden set only after the last query.
  const HiddenSearch search = SearchHiddenY(params, log);
  const Subset proposal = baseline->Propose(log);
  const std::int64_t r = params.RhoThreshold();
  const SystemKind star = MakeStarSystem();

  DuelReport report{
      .algorithm = baseline->name(),
      .params = params,
      .seed = seed,
      .budget = budget,
      .queries_used = log.size(),
      .log = log,
      .adjudication = search.survivor ? Adjudication::kIndistinguishable
                                      : Adjudication::kDistinguished,
      .hidden = search.survivor,
      .transcript_verified = false,
      .eliminated_hidden = search.eliminated,
      .hidden_candidates = search.candidates,
      .proposal = proposal,
      .proposal_value = Objective(params, proposal),
      .star_optimum = SystemOptimum(params, star),
      .hidden_optimum = std::nullopt,
      .r = r,
      .star_verdict = RBestVerify(params, star, proposal, r),
      .hidden_verdict = std::nullopt,
  };
  if (search.survivor) {
    const SystemKind hidden = MakeHiddenSystem(params, *search.survivor);
    report.transcript_verified =
        VerifyTranscript(params, *search.survivor, log);
    report.hidden_optimum = SystemOptimum(params, hidden);
    report.hidden_verdict = RBestVerify(params, hidden, proposal, r);
  }
  return report;
}

std::string FormatDuelReport(const DuelReport& report) {
  std::ostringstream out;
  out << "duel algorithm=" << report.algorithm
      << " instance=" << report.params.ToString() << " seed=" << report.seed
      << " budget=" << report.budget << '\n';
  out << "queries_used=" << report.queries_used << '\n';
  for (std::int64_t p = 1; p <= report.log.size(); ++p) {
    const LoggedQuery& e = report.log.at(p);
    out << "query " << p << ": " << FormatSparse(e.query)
        << " -> value=" << e.answer.value
        << " witness=" << e.answer.witness.ToString()
        << " branch=" << ToString(e.answer.branch) << '\n';
  }
  out << "adjudication=" << ToString(report.adjudication) << '\n';
  out << "hidden_candidates=" << report.hidden_candidates
      << " eliminated=" << report.eliminated_hidden << '\n';
  if (report.hidden) {
    out << "hidden_Y=" << report.hidden->ToString()
        << " transcript_verified=" << (report.transcript_verified ? "true" : "false")
        << '\n';
  }
  out << "proposal=" << report.proposal.ToString()
      << " f=" << report.proposal_value << '\n';
  out << "S*-world: optimum=" << report.star_optimum << ' '
      << VerdictText(report.star_verdict) << '\n';
  if (report.hidden_verdict) {
    out << "S_Y-world: optimum=" << *report.hidden_optimum << ' '
        << VerdictText(*report.hidden_verdict) << '\n';
    if (report.adjudication == Adjudication::kIndistinguishable &&
        !report.hidden_verdict->pass) {
      out << "gap: the proposal has value " << report.proposal_value
          << " in both worlds, but every " << report.r
          << "-best solution over S_Y has value <= -1\n";
    }
  } else {
    out << "S_Y-world: no surviving hidden set\n";
  }
  return out.str();
}

std::string FormatDuelRecord(const DuelReport& report) {
  nlohmann::json j;
  j["algorithm"] = report.algorithm;
  j["instance"] = report.params.ToString();
  j["seed"] = report.seed;
  j["budget"] = report.budget;
  j["queries_used"] = report.queries_used;
  nlohmann::json transcript = nlohmann::json::array();
  for (const LoggedQuery& e : report.log.entries()) {
    transcript.push_back({{"query", FormatSparse(e.query)},
                          {"value", e.answer.value},
                          {"witness", e.answer.witness.Elements()},
                          {"branch", ToString(e.answer.branch)}});
  }
  j["transcript"] = transcript;
  j["adjudication"] = ToString(report.adjudication);
  j["hidden_candidates"] = report.hidden_candidates;
  j["eliminated"] = report.eliminated_hidden;
  j["hidden_Y"] = report.hidden ? nlohmann::json(report.hidden->Elements())
                                : nlohmann::json(nullptr);
  j["transcript_verified"] = report.transcript_verified;
  j["proposal"] = report.proposal.Elements();
  j["proposal_value"] = report.proposal_value;
  j["r"] = report.r;
  j["star_optimum"] = report.star_optimum;
  j["star_verdict"] = VerdictJson(report.star_verdict);
  j["hidden_optimum"] = report.hidden_optimum
                            ? nlohmann::json(*report.hidden_optimum)
                            : nlohmann::json(nullptr);
  j["hidden_verdict"] = report.hidden_verdict
                            ? VerdictJson(*report.hidden_verdict)
                            : nlohmann::json(nullptr);
  return j.dump(2);
}

}  // namespace indsys
