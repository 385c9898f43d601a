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

#ifndef TESTCOVER_ERRORS_HPP_
#define TESTCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace testcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The instance admits no r-test set (some pair can never reach coverage r).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A precondition on an operation was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The potential function is undefined: m* <= (r+1)/r makes its base
// nonpositive, so the trace machinery has nothing meaningful to compute.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace testcover

#endif  // TESTCOVER_ERRORS_HPP_
