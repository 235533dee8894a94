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

#include "entangle/linalg.hpp"

namespace entangle {

inline constexpr double kDefaultPsdTol = 1e-10;

class PureState;

/// Hermitian, unit-trace, positive-semidefinite matrix over a composite space.
///
/// The constructor validates every invariant and throws std::invalid_argument
/// naming the violated one together with its magnitude. Inputs that are
/// Hermitian within tolerance are stored symmetrized.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix mat, Dims dims, double psd_tol = kDefaultPsdTol);
  explicit DensityMatrix(const PureState& psi);

  const ComplexMatrix& matrix() const { return mat_; }
  const Dims& dims() const { return dims_; }
  double psd_tol() const { return psd_tol_; }
  std::size_t dimension() const { return mat_.rows(); }
  bool is_bipartite() const { return dims_.size() == 2; }

 private:
  ComplexMatrix mat_;
  Dims dims_;
  double psd_tol_;
};

/// Normalized state vector over a composite space.
class PureState {
 public:
  PureState(ComplexVector vec, Dims dims);

  /// Normalizes `vec` first; throws if it is (numerically) zero.
  static PureState normalized(ComplexVector vec, Dims dims);

  const ComplexVector& vector() const { return vec_; }
  const Dims& dims() const { return dims_; }
  DensityMatrix density() const { return DensityMatrix(*this); }

 private:
  ComplexVector vec_;
  Dims dims_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(BellKind kind);
/// Accepts "phi+", "phi-", "psi+", "psi-".
BellKind parse_bell_kind(std::string_view name);

PureState bell(BellKind kind);

/// sum_i |ii> / sqrt(d)
PureState maximally_entangled(std::size_t d);

/// (1-p) identity/d^2 + p P+, with P+ the d-dimensional maximally entangled
/// projector. For d = 2 this is the Werner state.
DensityMatrix isotropic(double p, std::size_t d);
DensityMatrix werner(double p);

PureState ghz();
PureState w_state();

/// (1-p) identity/8 + p |W><W|
DensityMatrix noisy_w(double p);

/// Swap operator on C^n ⊗ C^n.
ComplexMatrix swap_operator(std::size_t n);

/// alpha * P_sym / tr(P_sym) + (1 - alpha) * P_anti / tr(P_anti) on n x n.
/// `alpha` is the weight on the symmetric subspace.
DensityMatrix sym_antisym_family(std::size_t n, double alpha);

/// Computational basis vector |index> of the composite space.
PureState basis_state(const Dims& dims, std::size_t index);

/// Normalized vector of independent standard complex Gaussians.
PureState random_pure(const Dims& dims, std::uint64_t seed);

/// G G^dagger / tr(G G^dagger) with G a (dim x rank) complex Gaussian matrix.
DensityMatrix random_density(const Dims& dims, std::size_t rank, std::uint64_t seed);

/// Convex mixture of `terms` random pure product states with random weights;
/// separable by construction.
DensityMatrix random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed);

}  // namespace entangle
