// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERREC_ERRORS_H_
#define HYPERREC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hyperrec {

// Invalid model parameter, e.g. theta < 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index or label outside the valid range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A size, table or state-space budget would be exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An injected draw does not describe a valid recruitment subset.
class InjectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Regime declaration inconsistent with (n, k).
class RegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Statistical test cannot be formed from the data (too few bins or samples).
class DegenerateTestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperrec

#endif  // HYPERREC_ERRORS_H_
