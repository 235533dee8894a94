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
#include <string_view>

#include "entangle/states.hpp"

namespace entangle {

enum class WitnessClass { Entanglement, Schmidt, GHZ, W };

struct WitnessKind {
  WitnessClass cls = WitnessClass::Entanglement;
  /// Only meaningful for WitnessClass::Schmidt.
  std::size_t schmidt_k = 0;

  static WitnessKind entanglement() { return {WitnessClass::Entanglement, 0}; }
  static WitnessKind schmidt(std::size_t k) { return {WitnessClass::Schmidt, k}; }
  static WitnessKind ghz() { return {WitnessClass::GHZ, 0}; }
  static WitnessKind w() { return {WitnessClass::W, 0}; }

  friend bool operator==(const WitnessKind&, const WitnessKind&) = default;
};

/// "entanglement", "schmidt-3", "ghz", "w".
std::string to_string(const WitnessKind& kind);
WitnessKind parse_witness_kind(std::string_view text);

/// Hermitian operator tagged with what it is meant to detect.
class WitnessOperator {
 public:
  WitnessOperator(ComplexMatrix mat, Dims dims, WitnessKind kind, std::string provenance);

  const ComplexMatrix& matrix() const { return mat_; }
  const Dims& dims() const { return dims_; }
  const WitnessKind& kind() const { return kind_; }
  const std::string& provenance() const { return provenance_; }

 private:
  ComplexMatrix mat_;
  Dims dims_;
  WitnessKind kind_;
  std::string provenance_;
};

enum class MapKind { Transpose, Reduction };
std::string_view to_string(MapKind kind);

inline constexpr std::size_t kDefaultRestarts = 50;

/// Re tr(W rho). Throws std::logic_error if the imaginary part exceeds 1e-10.
double evaluate(const WitnessOperator& w, const DensityMatrix& rho);

/// W = (|eta><eta|)^{T_A} with eta the eigenvector of the most negative
/// eigenvalue of rho^{T_A}. Throws std::invalid_argument for PPT input.
WitnessOperator construct_from_npt(const DensityMatrix& rho);

struct ProductMinimum {
  double value;
  ComplexVector a;
  ComplexVector b;
  std::size_t restarts;
  /// Index of the restart that produced `value`.
  std::size_t best_restart;
};

/// Smallest <a⊗b|W|a⊗b> found by alternating smallest-eigenvector steps from
/// `restarts` seeded random starts. An upper bound on the true minimum.
ProductMinimum min_product_expectation(const WitnessOperator& w, std::size_t restarts,
                                       std::uint64_t seed);

struct ShiftedWitness {
  WitnessOperator witness;
  /// W' = W - shift * identity.
  double shift;
  /// min_product_expectation(W') recomputed after the shift.
  double residual;
  std::size_t restarts;
};

/// Moves the witness hyperplane parallel to itself until it touches the
/// product states found by the see-saw search. Throws std::runtime_error if
/// the post-check lands outside [-1e-8, 1e-6].
ShiftedWitness shift_optimize(const WitnessOperator& w, std::size_t restarts, std::uint64_t seed);

/// (1 ⊗ Lambda) P+ for the chosen positive map applied to the second factor.
WitnessOperator jamiolkowski(MapKind map, std::size_t d);

/// 3/4 identity - |GHZ><GHZ|
WitnessOperator ghz_witness();
/// 2/3 identity - |W><W|
WitnessOperator w_witness();

struct SchmidtWitnessResult {
  double value;
  std::size_t k;
  /// value < 0 certifies Schmidt number >= k; otherwise no conclusion.
  bool certified;
};

SchmidtWitnessResult schmidt_witness_eval(const WitnessOperator& w, const DensityMatrix& rho);

enum class TripartiteEvidence { OutsideBiseparable, GhzNotW, NoConclusion };

struct TripartiteClassification {
  double ghz_value;
  double w_value;
  /// w_value < 0: genuinely tripartite, outside B.
  bool outside_biseparable;
  /// ghz_value < 0: in GHZ but not in W.
  bool ghz_not_w;
  /// Strongest conclusion available: GhzNotW implies OutsideBiseparable.
  TripartiteEvidence strongest() const;
};

TripartiteClassification classify_tripartite(const DensityMatrix& rho);

}  // namespace entangle
