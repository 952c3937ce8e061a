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

#ifndef INDSYS_CLI_H_
#define INDSYS_CLI_H_

#include <iosfwd>

namespace indsys {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedVerdict = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `indsys` tool. Subcommands: verify, bounds, tset,
// image, duel, gen, replay. Returns 0 when every verdict passes, 1 on a
// failed verdict and 2 on a usage or input error.
int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace indsys

#endif  // INDSYS_CLI_H_
