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

#include "optimize.hpp"

#include <algorithm>
#include <cmath>

namespace entangle::detail {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

MinimizeResult bfgs_minimize(const Objective& f, std::vector<double> x0,
                             const MinimizeOptions& options) {
  const std::size_t n = x0.size();
  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  auto gradient = [&](std::vector<double> x) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = x[i];
      const double h = options.gradient_step * std::max(1.0, std::abs(xi));
      x[i] = xi + h;
      const double up = eval(x);
      x[i] = xi - h;
      const double down = eval(x);
      x[i] = xi;
      g[i] = (up - down) / (2.0 * h);
    }
    return g;
  };
  auto reset_identity = [n](std::vector<double>& h) {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
  };

  MinimizeResult result{std::move(x0), 0.0, 0, 0};
  result.value = eval(result.x);
  if (n == 0) {
    result.evaluations = evaluations;
    return result;
  }

  std::vector<double> inv_hessian(n * n);
  reset_identity(inv_hessian);
  auto g = gradient(result.x);

  for (; result.iterations < options.max_iterations; ++result.iterations) {
    if (result.value <= options.floor) break;

    std::vector<double> dir(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dir[i] -= inv_hessian[i * n + j] * g[j];
    double slope = dot(dir, g);
    if (!(slope < 0.0)) {
      reset_identity(inv_hessian);
      for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
      slope = dot(dir, g);
      if (!(slope < 0.0)) break;
    }

    double step = 1.0;
    std::vector<double> trial(n);
    double trial_value = result.value;
    bool accepted = false;
    for (int k = 0; k < 40; ++k) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = result.x[i] + step * dir[i];
      trial_value = eval(trial);
      if (std::isfinite(trial_value) && trial_value <= result.value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // A stale curvature model can point nowhere useful; retry once along -g.
      bool was_identity = true;
      for (std::size_t i = 0; i < n && was_identity; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (inv_hessian[i * n + j] != (i == j ? 1.0 : 0.0)) {
            was_identity = false;
            break;
          }
      if (was_identity) break;
      reset_identity(inv_hessian);
      continue;
    }

    const double improvement = result.value - trial_value;
    auto g_new = gradient(trial);
    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = trial[i] - result.x[i];
      y[i] = g_new[i] - g[i];
    }
    result.x = trial;
    result.value = trial_value;
    g = std::move(g_new);
    if (improvement < options.value_tol) break;

    const double sy = dot(s, y);
    if (sy > 1e-16) {
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      std::vector<double> hy(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hy[i] += inv_hessian[i * n + j] * y[j];
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          inv_hessian[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) +
                                    (rho * rho * yhy + rho) * s[i] * s[j];
    }
  }
  result.evaluations = evaluations;
  return result;
}

}  // namespace entangle::detail
