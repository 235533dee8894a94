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
#include <string>
#include <vector>

#include "entangle/states.hpp"

namespace entangle {

/// Two-qubit isotropic (Werner) parameters. fidelity = (1 + 3p) / 4.
struct IsotropicParams {
  double p;
  double fidelity;
};

struct RecurrenceStep {
  double fidelity_before;
  double fidelity_after;
  double success_probability;
};

struct RecurrenceTrace {
  std::vector<RecurrenceStep> steps;
  /// 2^k / prod(success probabilities): raw pairs spent per output pair.
  double pairs_consumed_estimate = 1.0;
  bool target_reached = false;
};

/// Phi+-fidelity of a two-qubit state and the isotropic weight it maps to
/// under twirling. p = (4F - 1) / 3 lies in [-1/3, 1].
IsotropicParams twirl_to_isotropic(const DensityMatrix& rho);

struct RecurrenceOutcome {
  DensityMatrix state;
  double success_probability;
};

/// One round of the CNOT recurrence on two copies of `rho`: both parties
/// apply CNOT (first pair controls), measure the second pair in the
/// computational basis and keep the first pair when the outcomes agree.
/// Throws std::runtime_error when the success probability is below 1e-12.
RecurrenceOutcome recurrence_step(const DensityMatrix& rho);

struct FidelityUpdate {
  double fidelity;
  double success_probability;
};

/// Fidelity after one recurrence round on the isotropic state of fidelity
/// `f`, f in [1/4, 1].
FidelityUpdate fidelity_map(double f);

/// Repeats `fidelity_map` (re-twirling each round) until `target` or
/// `max_steps`. Throws std::invalid_argument when f0 <= 1/2 < target, since
/// the map does not improve fidelity there.
RecurrenceTrace iterate(double f0, double target, std::size_t max_steps);

/// Iterates `recurrence_step` on the full state. With `retwirl` the state is
/// replaced by its isotropic projection after every round, which reproduces
/// `iterate`; without it the raw post-selected state is fed back.
RecurrenceTrace iterate_state(const DensityMatrix& rho, double target, std::size_t max_steps,
                              bool retwirl);

enum class DistillabilityVerdict { Distillable, Inconclusive };

struct DistillabilityCertificate {
  std::size_t copies;
  /// Best (lowest) <psi|(rho^{T_A})^{⊗n}|psi> over Schmidt-rank-2 psi.
  double value;
  /// The minimizing vector on (A_1..A_n) ⊗ (B_1..B_n).
  ComplexVector witness_vector;
  Dims witness_dims;
  DistillabilityVerdict verdict;
  std::size_t restarts;
};

std::string to_string(const DistillabilityCertificate& cert);

inline constexpr std::size_t kMaxDistillabilityDimension = 256;

/// Searches for a Schmidt-rank-2 vector with negative expectation in
/// (rho^{T_A})^{⊗n}, n in {1, 2}. Distillable(n) iff the best value is below
/// -1e-10; otherwise Inconclusive.
DistillabilityCertificate distillability_test(const DensityMatrix& rho, std::size_t copies,
                                              std::size_t restarts, std::uint64_t seed);

}  // namespace entangle
