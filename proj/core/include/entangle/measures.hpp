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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "entangle/distill.hpp"
#include "entangle/states.hpp"

namespace entangle {

enum class MeasureKind { EntropyPure, FormationUpper, RelativeEntropyUpper };
std::string_view to_string(MeasureKind kind);

struct OptimizerStats {
  /// Restarts actually run; the search stops early once the estimate is ~0.
  std::size_t restarts = 0;
  std::size_t iterations = 0;
  /// Best value seen after each restart (non-increasing).
  std::vector<double> best_trace;
};

/// Value in ebits (base-2 logarithms). The optimized kinds are upper bounds:
/// every candidate they evaluate is feasible.
struct MeasureEstimate {
  MeasureKind kind;
  double value;
  OptimizerStats stats;
};

inline constexpr std::size_t kDefaultMeasureRestarts = 8;

/// -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of entanglement of a bipartite pure state.
MeasureEstimate pure_entanglement(const PureState& psi);

/// Upper estimate of the entanglement of formation: the lowest average
/// reduced entropy over pure-state decompositions of rho with
/// `ensemble_size` members found by local search. `ensemble_size` = 0 picks
/// the total dimension. Throws std::invalid_argument when the ensemble is
/// smaller than rank(rho).
MeasureEstimate entanglement_of_formation(const DensityMatrix& rho, std::size_t ensemble_size,
                                          std::size_t restarts, std::uint64_t seed);

/// Upper estimate of the relative entropy of entanglement, minimizing over
/// mixtures of `mixture_size` pure product states (0 picks the total
/// dimension).
MeasureEstimate relative_entropy_estimate(const DensityMatrix& rho, std::size_t mixture_size,
                                          std::size_t restarts, std::uint64_t seed);

struct BoundsReport {
  /// Floor on the distillable entanglement; always 0 here.
  double lower;
  /// Formation estimate, standing in for the entanglement cost under the
  /// (unproven) conjecture that the two coincide.
  double upper;
  bool ppt_flag;
  /// Present for NPT input: outcome of a one-copy distillability search.
  std::optional<DistillabilityCertificate> distillability;
};

BoundsReport bounds_report(const DensityMatrix& rho, std::size_t restarts = kDefaultMeasureRestarts,
                           std::uint64_t seed = 0);

}  // namespace entangle
