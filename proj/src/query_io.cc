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

#include "indsys/query_io.h"

#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "indsys/errors.h"

namespace indsys {
namespace {

constexpr std::array<char, 4> kDenseMagic = {'I', 'Q', 'V', '1'};

void PutU32(std::ostream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutI64(std::ostream& out, std::int64_t v) {
  const auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((u >> (8 * i)) & 0xff));
}

std::uint64_t GetLe(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    const int ch = in.get();
    if (ch == std::char_traits<char>::eof()) {
      throw FormatError("dense query file is truncated");
    }
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ch)) << (8 * i);
  }
  return v;
}

std::int64_t ParseInteger(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw FormatError("bad " + what + " '" + token + "'");
  }
  if (used != token.size()) throw FormatError("bad " + what + " '" + token + "'");
  return v;
}

}  // namespace

std::string FormatSparse(const WeightVector& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) out << ' ';
    out << (i + 1) << ':' << c[i];
    first = false;
  }
  return first ? "-" : out.str();
}

WeightVector ParseSparse(const std::string& text, std::int64_t n) {
  WeightVector c(static_cast<std::size_t>(n), 0);
  std::istringstream in(text);
  std::string token;
  std::int64_t last = 0;
  bool saw_dash = false;
  bool saw_pair = false;
  while (in >> token) {
    if (token == "-") {
      saw_dash = true;
      continue;
    }
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw FormatError("sparse entry '" + token + "' is not index:weight");
    }
    const std::int64_t index = ParseInteger(token.substr(0, colon), "index");
    const std::int64_t weight = ParseInteger(token.substr(colon + 1), "weight");
    if (index < 1 || index > n) {
      throw QueryError("sparse index " + std::to_string(index) +
                       " outside {1.." + std::to_string(n) + "}");
    }
    if (index <= last) {
      throw FormatError("sparse indices must be strictly increasing at '" +
                        token + "'");
    }
    last = index;
    c[static_cast<std::size_t>(index - 1)] = weight;
    saw_pair = true;
  }
  if (saw_dash && saw_pair) {
    throw FormatError("'-' denotes the zero vector and cannot be mixed with "
                      "entries");
  }
  return c;
}

std::vector<WeightVector> ReadSparseQueryFile(const std::string& path,
                                              std::int64_t n) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::vector<WeightVector> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back(ParseSparse(line, n));
  }
  return out;
}

void WriteDenseQueries(std::ostream& out, std::int64_t n,
                       const std::vector<WeightVector>& queries) {
  if (n < 0 || n > std::numeric_limits<std::uint32_t>::max() ||
      queries.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("dense query file dimensions exceed 32 bits");
  }
  out.write(kDenseMagic.data(), kDenseMagic.size());
  PutU32(out, static_cast<std::uint32_t>(n));
  PutU32(out, static_cast<std::uint32_t>(queries.size()));
  for (const WeightVector& c : queries) {
    if (static_cast<std::int64_t>(c.size()) != n) {
      throw QueryError("query has length " + std::to_string(c.size()) +
                       ", expected " + std::to_string(n));
    }
    for (std::int64_t v : c) PutI64(out, v);
  }
}

DenseQueries ReadDenseQueries(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kDenseMagic) {
    throw FormatError("dense query file has bad magic");
  }
  DenseQueries result;
  result.n = static_cast<std::int64_t>(GetLe(in, 4));
  const std::uint64_t count = GetLe(in, 4);
  result.queries.reserve(count);
  for (std::uint64_t q = 0; q < count; ++q) {
    WeightVector c(static_cast<std::size_t>(result.n));
    for (auto& v : c) v = static_cast<std::int64_t>(GetLe(in, 8));
    result.queries.push_back(std::move(c));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError("dense query file has trailing bytes");
  }
  return result;
}

}  // namespace indsys
