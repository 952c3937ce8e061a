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

#include "indsys/cli.h"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indsys/bounds.h"
#include "indsys/claim.h"
#include "indsys/duel.h"
#include "indsys/errors.h"
#include "indsys/hidden.h"
#include "indsys/image.h"
#include "indsys/params.h"
#include "indsys/query_io.h"
#include "indsys/verify_suite.h"

namespace indsys {
namespace {

struct InstanceFlags {
  std::string toy;
  std::int64_t paper_l = 0;
  std::string params_file;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags& flags) {
  auto* toy = cmd->add_option("--toy", flags.toy, "toy instance M,K,L");
  auto* paper = cmd->add_option("--paper", flags.paper_l, "paper instance l");
  auto* file = cmd->add_option("--params", flags.params_file, "instance file");
  toy->excludes(paper)->excludes(file);
  paper->excludes(file);
}

std::int64_t ParseField(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + " '" + text + "'");
}

Params ParseToy(const std::string& text) {
  std::vector<std::int64_t> fields;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) fields.push_back(ParseField(part, "--toy"));
  if (fields.size() != 3) {
    throw UsageError("--toy expects M,K,L, got '" + text + "'");
  }
  return MakeToyParams(fields[0], fields[1], fields[2]);
}

Params ResolveParams(const InstanceFlags& flags) {
  if (!flags.toy.empty()) return ParseToy(flags.toy);
  if (flags.paper_l != 0) return MakePaperParams(flags.paper_l);
  if (!flags.params_file.empty()) return ReadInstanceFile(flags.params_file);
  throw UsageError("an instance is required: --toy M,K,L, --paper L or "
                   "--params FILE");
}

void PrintWarnings(const Params& params, std::ostream& err) {
  for (const std::string& w : params.Warnings()) err << "warning: " << w << '\n';
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw FormatError("cannot open '" + path + "' for writing");
  file << text;
}

Subset ParseElements(const Params& params, const std::string& text) {
  Subset x(params.ground());
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) x.Insert(ParseField(part, "element"));
  }
  return x;
}

int RunVerify(const InstanceFlags& flags, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  const Params params = ResolveParams(flags);
  PrintWarnings(params, err);
  SuiteOptions options;
  options.seed = seed;
  out << "verify " << params.ToString() << '\n';
  bool all = true;
  for (const SuiteCheck& check : RunVerifySuite(params, options)) {
    out << FormatSuiteCheck(check) << '\n';
    all = all && check.pass;
  }
  return all ? kExitOk : kExitFailedVerdict;
}

int RunBounds(std::int64_t l, const std::string& out_path, std::ostream& out) {
  if (l < 2) throw UsageError("bounds requires --l >= 2");
  const std::vector<BoundReport> reports = VerifyBoundChain(l);
  out << "bound chain for l=" << l << " (k=" << 7 * l << ", m=" << 8 * l * l
      << ", n=" << 16 * l * l << ")\n";
  bool all = true;
  std::string records;
  for (const BoundReport& r : reports) {
    out << FormatReportText(r) << '\n';
    records += FormatReportRecord(r) + '\n';
    all = all && r.verdict;
  }
  out << "log2(query lower bound) = " << static_cast<double>(QueryLowerBoundLog2(l))
      << ", (1/4) sqrt(n) = " << l << '\n';
  if (!out_path.empty()) WriteText(out_path, records);
  return all ? kExitOk : kExitFailedVerdict;
}

int RunTSet(const InstanceFlags& flags, const std::string& c_path,
            std::int64_t i1, std::int64_t i2, std::ostream& out,
            std::ostream& err) {
  const Params params = ResolveParams(flags);
  PrintWarnings(params, err);
  const std::vector<WeightVector> queries =
      ReadSparseQueryFile(c_path, params.n());
  if (queries.empty()) throw UsageError("query file '" + c_path + "' is empty");
  const TSet t = ComputeTSet(params, queries.front(), i1, i2);
  out << "T(" << i1 << "," << i2 << ") for c = " << FormatSparse(t.query)
      << " on " << params.ToString() << '\n';
  out << "S* maximum = " << t.star_max << ", |T| = " << t.size() << '\n';
  for (const Subset& z : t.members) out << "  " << z.ToString() << '\n';
  const CrossIntersectionResult cross = CheckCrossIntersecting(params, t);
  out << (cross.ok ? "[PASS]" : "[FAIL]") << " cross_intersecting";
  if (!cross.ok) {
    out << ": " << cross.violation->first.ToString() << " vs "
        << cross.violation->second.ToString();
  }
  out << '\n';
  const BoundReport frankl = FranklRatioCheck(params, t);
  out << FormatReportText(frankl) << '\n';
  const bool size_ok =
      Compare(BigCount::Exact(t.size()), TSetSizeBound(params)) <= 0;
  out << (size_ok ? "[PASS]" : "[FAIL]") << " size_bound: |T| = " << t.size()
      << " <= C(m,l) C(m,k+l) = " << TSetSizeBound(params).ToString() << '\n';
  return cross.ok && frankl.verdict && size_ok ? kExitOk : kExitFailedVerdict;
}

int RunImage(const InstanceFlags& flags, const std::string& kind_name,
             const std::string& hidden_text, std::ostream& out,
             std::ostream& err) {
  const Params params = ResolveParams(flags);
  PrintWarnings(params, err);
  std::optional<SystemKind> kind;
  if (kind_name == "sstar") {
    kind = MakeStarSystem();
  } else if (kind_name == "sy") {
    const std::int64_t target = params.k() + params.l();
    Subset hidden = hidden_text.empty()
                        ? EnumerateLevel(params.ground(), target, target).front()
                        : ParseElements(params, hidden_text);
    kind = MakeHiddenSystem(params, hidden);
  } else {
    throw UsageError("--kind must be sstar or sy");
  }
  const Image closed = ClosedFormImage(params, *kind);
  out << "closed-form image of " << KindName(*kind) << " on "
      << params.ToString() << ": " << closed.size() << " points\n";
  for (const ImagePoint& p : closed) {
    out << "  " << ToString(p) << " f=" << EvalF(params, p) << '\n';
  }
  if (params.n() > 24) {
    out << "enumeration skipped (n = " << params.n() << " > 24)\n";
    return kExitOk;
  }
  const bool same = EnumeratedImage(params, *kind) == closed;
  out << (same ? "[PASS]" : "[FAIL]")
      << " enumerated image equals the closed form\n";
  return same ? kExitOk : kExitFailedVerdict;
}

int RunDuelCommand(const InstanceFlags& flags, const std::string& algo,
                   std::int64_t budget, std::uint64_t seed,
                   const std::string& out_path, const std::string& replay_path,
                   std::ostream& out, std::ostream& err) {
  const Params params = ResolveParams(flags);
  PrintWarnings(params, err);
  const DuelReport report = RunDuel(params, algo, budget, seed);
  out << FormatDuelReport(report);
  if (!out_path.empty()) WriteText(out_path, FormatDuelRecord(report) + "\n");
  if (!replay_path.empty()) WriteReplayFile(report.log, replay_path);
  if (report.adjudication == Adjudication::kIndistinguishable) {
    const bool gap = report.transcript_verified && report.proposal_value == 0 &&
                     report.hidden_verdict && !report.hidden_verdict->pass;
    return gap ? kExitOk : kExitFailedVerdict;
  }
  return kExitOk;
}

int RunGen(const std::string& mode, std::int64_t l, std::int64_t m,
           std::int64_t k, const std::string& rho, const std::string& out_path,
           std::ostream& out, std::ostream& err) {
  Params params;
  if (mode == "paper") {
    if (l == 0) throw UsageError("gen --mode paper requires --l");
    params = MakePaperParams(l);
  } else if (mode == "toy") {
    if (l == 0 || m == 0 || k == 0) {
      throw UsageError("gen --mode toy requires --m, --k and --l");
    }
    params = MakeToyParams(m, k, l, Rational::Parse(rho));
  } else {
    throw UsageError("--mode must be paper or toy");
  }
  PrintWarnings(params, err);
  if (out_path.empty()) {
    out << FormatInstance(params);
  } else {
    WriteInstanceFile(params, out_path);
    out << "wrote " << params.ToString() << " to " << out_path << '\n';
  }
  return kExitOk;
}

int RunReplay(const std::string& path, std::ostream& out) {
  const QueryLog log = ReadReplayFile(path);
  const Params& params = log.params();
  out << "replay " << path << ": " << log.size() << " queries on "
      << params.ToString() << ", all answers match the S* oracle\n";
  const HiddenSearch search = SearchHiddenY(params, log);
  out << "hidden candidates=" << search.candidates
      << " eliminated=" << search.eliminated << '\n';
  if (!search.survivor) {
    out << "no surviving hidden set: the transcript distinguishes S* from "
           "every S_Y\n";
    return kExitOk;
  }
  const bool ok = VerifyTranscript(params, *search.survivor, log);
  out << (ok ? "[PASS]" : "[FAIL]") << " transcript consistent with S_Y for Y="
      << search.survivor->ToString() << '\n';
  return ok ? kExitOk : kExitFailedVerdict;
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Adversary and verifier toolkit for the 2-dimensional "
               "independence-system lower bound"};
  app.name("indsys");
  app.require_subcommand(1);

  InstanceFlags verify_flags;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "run the toy-scale verifier suite");
  AddInstanceFlags(verify, verify_flags);
  verify->add_option("--seed", verify_seed, "random seed");

  std::int64_t bounds_l = 0;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "evaluate the counting chain");
  bounds->add_option("--l", bounds_l, "l (k = 7l, m = 8l^2)")->required();
  bounds->add_option("--out", bounds_out, "write JSON-lines records");

  InstanceFlags tset_flags;
  std::string tset_c;
  std::int64_t tset_i1 = 0;
  std::int64_t tset_i2 = 0;
  auto* tset = app.add_subcommand("tset", "compute and check one T-set");
  AddInstanceFlags(tset, tset_flags);
  tset->add_option("--c", tset_c, "sparse query file")->required();
  tset->add_option("--i1", tset_i1)->required();
  tset->add_option("--i2", tset_i2)->required();

  InstanceFlags image_flags;
  std::string image_kind;
  std::string image_y;
  auto* image = app.add_subcommand("image", "closed-form and enumerated images");
  AddInstanceFlags(image, image_flags);
  image->add_option("--kind", image_kind, "sstar or sy")->required();
  image->add_option("--y", image_y, "hidden set elements, comma separated");

  InstanceFlags duel_flags;
  std::string duel_algo;
  std::int64_t duel_budget = 0;
  std::uint64_t duel_seed = 1;
  std::string duel_out;
  std::string duel_replay;
  auto* duel = app.add_subcommand("duel", "run a baseline against the adversary");
  AddInstanceFlags(duel, duel_flags);
  duel->add_option("--algo", duel_algo,
                   "random-query, unit-directions or greedy-coordinate")
      ->required();
  duel->add_option("--budget", duel_budget, "query budget")->required();
  duel->add_option("--seed", duel_seed, "random seed");
  duel->add_option("--out", duel_out, "write a JSON report");
  duel->add_option("--replay", duel_replay, "write the replay file");

  std::string gen_mode;
  std::int64_t gen_l = 0;
  std::int64_t gen_m = 0;
  std::int64_t gen_k = 0;
  std::string gen_rho = "1/17";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write an instance file");
  gen->add_option("--mode", gen_mode, "paper or toy")->required();
  gen->add_option("--l", gen_l);
  gen->add_option("--m", gen_m);
  gen->add_option("--k", gen_k);
  gen->add_option("--rho", gen_rho, "toy mode rho, p/q");
  gen->add_option("--out", gen_out, "instance file");

  std::string replay_file;
  auto* replay = app.add_subcommand("replay", "check a replay file");
  replay->add_option("--file", replay_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return RunVerify(verify_flags, verify_seed, out, err);
    if (*bounds) return RunBounds(bounds_l, bounds_out, out);
    if (*tset) return RunTSet(tset_flags, tset_c, tset_i1, tset_i2, out, err);
    if (*image) return RunImage(image_flags, image_kind, image_y, out, err);
    if (*duel) {
      return RunDuelCommand(duel_flags, duel_algo, duel_budget, duel_seed,
                            duel_out, duel_replay, out, err);
    }
    if (*gen) {
      return RunGen(gen_mode, gen_l, gen_m, gen_k, gen_rho, gen_out, out, err);
    }
    if (*replay) return RunReplay(replay_file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace indsys
