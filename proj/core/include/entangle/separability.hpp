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

#include <string_view>
#include <vector>

#include "entangle/states.hpp"

namespace entangle {

/// Eigenvalue sign decisions treat anything at or above this as non-negative.
inline constexpr double kSignTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-8;

enum class Criterion { PPT, Reduction, Majorization };
std::string_view to_string(Criterion c);

struct CriterionReport {
  Criterion criterion;
  bool satisfied;
  /// Raw margin; negative means violated. Callers may re-threshold.
  double margin;
  /// |margin| <= kSignTol: reported as satisfied, but sits on the boundary.
  bool boundary;
};

enum class VerdictStatus { Separable, Entangled, Undecided };
std::string_view to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status;
  std::vector<CriterionReport> basis;
  Dims dims;
};

struct SchmidtDecomposition {
  /// Strictly positive, descending.
  std::vector<double> coefficients;
  std::vector<ComplexVector> left_basis;
  std::vector<ComplexVector> right_basis;
  std::size_t rank() const { return coefficients.size(); }
};

SchmidtDecomposition schmidt_decompose(const PureState& psi, double rank_tol = kDefaultRankTol);

/// Margin is the minimum eigenvalue of the partial transpose on subsystem A.
CriterionReport ppt_criterion(const DensityMatrix& rho);
/// Margin is min over both sides of lambda_min(rho_A ⊗ 1 - rho), lambda_min(1 ⊗ rho_B - rho).
CriterionReport reduction_criterion(const DensityMatrix& rho);
/// Margin is the most negative partial-sum slack sum_k(lambda_reduced) - sum_k(lambda_global)
/// over both reduced sides, the reduced spectra zero-padded to the global length.
CriterionReport majorization_criterion(const DensityMatrix& rho);

/// True for 2x2, 2x3 and 3x2, where a positive partial transpose is also sufficient.
bool ppt_is_sufficient(const Dims& dims);

/// Runs every criterion and combines them. In 2x2 and 2x3 the PPT sign is
/// decisive; elsewhere a violation proves entanglement and otherwise the
/// verdict is Undecided.
Verdict analyze(const DensityMatrix& rho);

}  // namespace entangle
