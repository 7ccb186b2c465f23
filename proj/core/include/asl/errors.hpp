// Copyright 2026 The analog-search-lab authors
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

#ifndef ASL_ERRORS_HPP
#define ASL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asl {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// usage_error -> 2, everything else -> 1.

// A precondition on an input value does not hold (names the offending field).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation left its numerical validity envelope (acos argument drift
// beyond tolerance, non-convergent quadrature, failed eigensolve, ...).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// A resource limit was hit (step-count overflow, unwritable output, ...).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad command line or config input.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asl

#endif
