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

#ifndef INDSYS_ADVERSARY_H_
#define INDSYS_ADVERSARY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "indsys/oracle.h"
#include "indsys/params.h"

namespace indsys {

struct LoggedQuery {
  WeightVector query;
  OptResult answer;
};

// Append-only transcript of queries c^1, c^2, ... and the adversary's
// answers. Every answer is the S*-optimal one. Single writer; copies are
// independent snapshots.
class QueryLog {
 public:
  explicit QueryLog(const Params& params) : params_(params) {}

  const Params& params() const { return params_; }
  const std::vector<LoggedQuery>& entries() const { return entries_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // p is 1-based.
  const LoggedQuery& at(std::int64_t p) const { return entries_.at(p - 1); }

 private:
  friend OptResult AdversaryAnswer(QueryLog& log,
                                   std::span<const std::int64_t> c,
                                   std::int64_t cap);

  Params params_;
  std::vector<LoggedQuery> entries_;
};

// Answers c from S* (LinOpt with its deterministic tie-break) and appends
// the pair to the log. Throws QueryError for invalid queries, leaving the
// log untouched.
OptResult AdversaryAnswer(QueryLog& log, std::span<const std::int64_t> c,
                          std::int64_t cap = kDefaultMagnitudeCap);

// Line-oriented replay file:
//   indsys-replay 1
//   instance mode=toy l=2 k=1 m=4 n=8 rho=1/17
//   <sparse query> | <value> | <witness elements, comma separated, or -> | <branch>
//   ...
std::string FormatReplay(const QueryLog& log);

// Re-asks every query and checks the recorded answer matches; throws
// FormatError on any mismatch or malformed line.
QueryLog ParseReplay(const std::string& text);

void WriteReplayFile(const QueryLog& log, const std::string& path);
QueryLog ReadReplayFile(const std::string& path);

}  // namespace indsys

#endif  // INDSYS_ADVERSARY_H_
