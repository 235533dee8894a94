// Copyright 2026 The Entangle Authors
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

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace entangle::detail {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeOptions {
  std::size_t max_iterations = 400;
  double gradient_step = 1e-6;
  /// Stop once an iteration improves the value by less than this.
  double value_tol = 1e-13;
  /// Stop as soon as the value drops below this (known lower bound reached).
  double floor = -1e300;
};

struct MinimizeResult {
  std::vector<double> x;
  double value;
  std::size_t iterations;
  std::size_t evaluations;
};

/// Quasi-Newton (BFGS) descent with central finite-difference gradients and
/// a backtracking Armijo line search. The returned value is always an
/// actual evaluation of `f` at the returned point.
MinimizeResult bfgs_minimize(const Objective& f, std::vector<double> x0,
                             const MinimizeOptions& options);

}  // namespace entangle::detail
