/* Copyright 2026 The setint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace setint {

/// Bad input: dimension mismatch, out-of-range parameter, malformed config.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation needs data the space does not carry (e.g. no declared infratype).
class unsupported_operation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A size cap was hit (cardinality, enumeration count).
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver stopped before reaching the requested certificate.
/// Carries the best value seen and its certified gap.
class solver_failure : public std::runtime_error {
 public:
  solver_failure(const std::string& what, double best_value, double gap)
      : std::runtime_error(what), best_value_(best_value), gap_(gap) {}

  double best_value() const noexcept { return best_value_; }
  double gap() const noexcept { return gap_; }

 private:
  double best_value_;
  double gap_;
};

}  // namespace setint
