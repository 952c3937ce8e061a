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

#include "indsys/adversary.h"

#include <fstream>
#include <sstream>

#include "indsys/errors.h"
#include "indsys/query_io.h"

namespace indsys {
namespace {

constexpr char kReplayMagic[] = "indsys-replay 1";

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    out.push_back(Trim(line.substr(start, bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string FormatWitness(const Subset& x) {
  if (x.empty()) return "-";
  std::string out;
  for (std::int64_t e : x.Elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

Subset ParseWitness(const GroundSet& ground, const std::string& text) {
  Subset x(ground);
  if (text == "-") return x;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const std::int64_t e = std::stoll(token, &used);
      if (used != token.size()) throw FormatError("");
      x.Insert(e);
    } catch (const InvalidSubsetError&) {
      throw;
    } catch (const std::exception&) {
      throw FormatError("bad witness element '" + token + "'");
    }
  }
  return x;
}

}  // namespace

OptResult AdversaryAnswer(QueryLog& log, std::span<const std::int64_t> c,
                          std::int64_t cap) {
  OptResult answer = LinOpt(log.params_, MakeStarSystem(), c, cap);
  log.entries_.push_back({WeightVector(c.begin(), c.end()), answer});
  return answer;
}

std::string FormatReplay(const QueryLog& log) {
  std::ostringstream out;
  out << kReplayMagic << '\n';
  std::string instance = FormatInstance(log.params());
  for (char& ch : instance) {
    if (ch == '\n') ch = ' ';
  }
  out << "instance " << Trim(instance) << '\n';
  for (const LoggedQuery& entry : log.entries()) {
    out << FormatSparse(entry.query) << " | " << entry.answer.value << " | "
        << FormatWitness(entry.answer.witness) << " | "
        << ToString(entry.answer.branch) << '\n';
  }
  return out.str();
}

QueryLog ParseReplay(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kReplayMagic) {
    throw FormatError("replay file must start with '" +
                      std::string(kReplayMagic) + "'");
  }
  if (!std::getline(in, line) || line.rfind("instance ", 0) != 0) {
    throw FormatError("replay file is missing the instance line");
  }
  std::string instance = line.substr(9);
  for (char& ch : instance) {
    if (ch == ' ') ch = '\n';
  }
  QueryLog log(ParseInstance(instance));
  const GroundSet ground = log.params().ground();
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields.size() != 4) {
      throw FormatError("replay line " + std::to_string(line_no) +
                        " does not have 4 '|'-separated fields");
    }
    const WeightVector c = ParseSparse(fields[0], log.params().n());
    OptResult recorded{0, ParseWitness(ground, fields[2]),
                       ParseBranch(fields[3])};
    try {
      std::size_t used = 0;
      recorded.value = std::stoll(fields[1], &used);
      if (used != fields[1].size()) throw FormatError("");
    } catch (const std::exception&) {
      throw FormatError("replay line " + std::to_string(line_no) +
                        " has a bad value '" + fields[1] + "'");
    }
    const OptResult answer = AdversaryAnswer(log, c);
    if (!(answer == recorded)) {
      throw FormatError("replay line " + std::to_string(line_no) +
                        " does not match the S* oracle answer");
    }
  }
  return log;
}

void WriteReplayFile(const QueryLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << FormatReplay(log);
}

QueryLog ReadReplayFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseReplay(buf.str());
}

}  // namespace indsys
