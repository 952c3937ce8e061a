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

#ifndef INDSYS_VERIFY_SUITE_H_
#define INDSYS_VERIFY_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "indsys/params.h"

namespace indsys {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::int64_t random_queries = 1000;
  std::int64_t claim_queries = 200;
  std::int64_t exchange_triples = 10000;
  std::int64_t closure_samples = 10000;
  std::int64_t hidden_samples = 5;
  std::int64_t duel_budget = 10;
};

// Runs every toy-scale verifier on `params`: down-closure, oracle versus
// explicit scan, images, f-value range, the T-set claim, superset counts,
// the exchange identity and one duel per baseline. The power set of the
// ground set must be enumerable.
std::vector<SuiteCheck> RunVerifySuite(const Params& params,
                                       const SuiteOptions& options = {});

// "[PASS] name: detail".
std::string FormatSuiteCheck(const SuiteCheck& check);

}  // namespace indsys

#endif  // INDSYS_VERIFY_SUITE_H_
