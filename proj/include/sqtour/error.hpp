// Copyright 2026 The sqtour Authors.
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

#ifndef SQTOUR_ERROR_HPP_
#define SQTOUR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sqtour {

// Malformed or out-of-contract input (bad file, violated precondition).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An exact oracle or engine refused an instance above its size cap.
class SizeCapExceeded : public std::length_error {
 public:
  explicit SizeCapExceeded(const std::string& what) : std::length_error(what) {}
};

// A property that holds on every valid input failed; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sqtour

#endif  // SQTOUR_ERROR_HPP_
