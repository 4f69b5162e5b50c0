// Copyright 2026 The rdnc Authors
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

#ifndef RDNC_ERRORS_HPP
#define RDNC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdnc {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A distortion-offset that no distortion value can realize.
class InfeasibleOffsetError : public std::runtime_error {
 public:
  explicit InfeasibleOffsetError(const std::string& what)
      : std::runtime_error(what) {}
};

// Source kind / utility combination without a closed-form subproblem.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what)
      : std::logic_error(what) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when two routes that must agree do not.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rdnc

#endif  // RDNC_ERRORS_HPP
