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

#ifndef INDSYS_QUERY_IO_H_
#define INDSYS_QUERY_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indsys/oracle.h"

namespace indsys {

// Sparse text: whitespace-separated "index:weight" pairs, 1-based indices,
// strictly increasing, nonzero weights. The zero vector is written as "-".
std::string FormatSparse(const WeightVector& c);
// Throws FormatError on malformed text and QueryError on an index outside
// {1..n}.
WeightVector ParseSparse(const std::string& text, std::int64_t n);

// One sparse query per line; blank lines and '#' comments are skipped.
std::vector<WeightVector> ReadSparseQueryFile(const std::string& path,
                                              std::int64_t n);

// Dense binary, all integers little-endian:
//   bytes 0-3   magic "IQV1"
//   bytes 4-7   uint32 n
//   bytes 8-11  uint32 count
//   then count * n int64 entries, query by query.
struct DenseQueries {
  std::int64_t n = 0;
  std::vector<WeightVector> queries;
};

void WriteDenseQueries(std::ostream& out, std::int64_t n,
                       const std::vector<WeightVector>& queries);
DenseQueries ReadDenseQueries(std::istream& in);

}  // namespace indsys

#endif  // INDSYS_QUERY_IO_H_
