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

#ifndef INDSYS_ERRORS_H_
#define INDSYS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace indsys {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element index outside the ground set, or a subset over the wrong ground set.
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

// A level set or power set is larger than the configured enumeration budget.
class EnumerationTooLargeError : public Error {
 public:
  using Error::Error;
};

// Instance parameters violate a constraint.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-range oracle query.
class QueryError : public Error {
 public:
  using Error::Error;
};

// A subset is not at a level the operation accepts.
class LevelError : public Error {
 public:
  using Error::Error;
};

// A candidate solution is not a member of the system it is checked against.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given system kind.
class UnsupportedKindError : public Error {
 public:
  using Error::Error;
};

// Malformed instance, query, or replay file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Bad command line usage; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace indsys

#endif  // INDSYS_ERRORS_H_
