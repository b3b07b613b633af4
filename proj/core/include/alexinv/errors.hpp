/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef ALEXINV_ERRORS_HPP
#define ALEXINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alexinv {

// Raised when a truncated computation gives different answers at bound m and
// m+1. The caller must retry with a larger truncation; silently returning an
// undertruncated answer is never an option.
class TruncationUnstable : public std::runtime_error {
 public:
  TruncationUnstable(const std::string& what, int bound)
      : std::runtime_error(what + " (unstable at truncation " +
                           std::to_string(bound) + "; increase it)"),
        bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

// Malformed key-value configuration input.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters outside the centrally enforced computation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace alexinv

#endif  // ALEXINV_ERRORS_HPP
