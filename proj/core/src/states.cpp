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

#include "entangle/states.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace entangle {

namespace {

std::string describe(const char* invariant, double magnitude) {
  std::ostringstream os;
  os.precision(3);
  os << invariant << " (magnitude " << std::scientific << magnitude << ")";
  return os.str();
}

ComplexVector gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return v;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims, double psd_tol)
    : mat_(std::move(mat)), dims_(std::move(dims)), psd_tol_(psd_tol) {
  if (!mat_.is_square()) throw std::invalid_argument("density matrix must be square");
  if (total_dimension(dims_) != mat_.rows())
    throw std::invalid_argument("density matrix size does not match the dimension list");

  const double herm = hermiticity_error(mat_);
  if (herm > kDefaultHermitianTol)
    throw std::invalid_argument(describe("density matrix is not Hermitian", herm));
  mat_ = hermitian_part(mat_);

  const double trace_err = std::abs(mat_.trace().real() - 1.0);
  if (trace_err > 1e-10)
    throw std::invalid_argument(describe("density matrix trace differs from 1", trace_err));

  const double lowest = min_eigenvalue(mat_);
  if (lowest < -psd_tol_)
    throw std::invalid_argument(describe("density matrix has a negative eigenvalue", -lowest));
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(ComplexMatrix::projector(psi.vector()), psi.dims()) {}

PureState::PureState(ComplexVector vec, Dims dims) : vec_(std::move(vec)), dims_(std::move(dims)) {
  if (vec_.empty() || total_dimension(dims_) != vec_.size())
    throw std::invalid_argument("state vector length does not match the dimension list");
  for (const auto& z : vec_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("state vector entries must be finite");
  const double err = std::abs(norm(vec_) - 1.0);
  if (err > 1e-12) throw std::invalid_argument(describe("state vector is not normalized", err));
}

PureState PureState::normalized(ComplexVector vec, Dims dims) {
  const double n = norm(vec);
  if (!(n > 1e-300)) throw std::invalid_argument("cannot normalize a zero vector");
  for (auto& z : vec) z /= n;
  return PureState(std::move(vec), std::move(dims));
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "?";
}

BellKind parse_bell_kind(std::string_view name) {
  if (name == "phi+") return BellKind::PhiPlus;
  if (name == "phi-") return BellKind::PhiMinus;
  if (name == "psi+") return BellKind::PsiPlus;
  if (name == "psi-") return BellKind::PsiMinus;
  throw std::invalid_argument("unknown Bell state '" + std::string(name) + "'");
}

PureState bell(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::PhiPlus: return PureState({h, 0.0, 0.0, h}, {2, 2});
    case BellKind::PhiMinus: return PureState({h, 0.0, 0.0, -h}, {2, 2});
    case BellKind::PsiPlus: return PureState({0.0, h, h, 0.0}, {2, 2});
    case BellKind::PsiMinus: return PureState({0.0, h, -h, 0.0}, {2, 2});
  }
  throw std::invalid_argument("unknown Bell state");
}

PureState maximally_entangled(std::size_t d) {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  ComplexVector v(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = amp;
  return PureState(std::move(v), {d, d});
}

DensityMatrix isotropic(double p, std::size_t d) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("isotropic weight p must lie in [0, 1]");
  const auto phi = maximally_entangled(d);
  const double n = static_cast<double>(d * d);
  ComplexMatrix mat = ComplexMatrix::identity(d * d) * Complex((1.0 - p) / n);
  mat += ComplexMatrix::projector(phi.vector()) * Complex(p);
  return DensityMatrix(std::move(mat), {d, d});
}

DensityMatrix werner(double p) { return isotropic(p, 2); }

PureState ghz() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v(8);
  v[0] = h;
  v[7] = h;
  return PureState(std::move(v), {2, 2, 2});
}

PureState w_state() {
  const double t = 1.0 / std::sqrt(3.0);
  ComplexVector v(8);
  v[1] = t;  // |001>
  v[2] = t;  // |010>
  v[4] = t;  // |100>
  return PureState(std::move(v), {2, 2, 2});
}

DensityMatrix noisy_w(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  ComplexMatrix mat = ComplexMatrix::identity(8) * Complex((1.0 - p) / 8.0);
  mat += ComplexMatrix::projector(w_state().vector()) * Complex(p);
  return DensityMatrix(std::move(mat), {2, 2, 2});
}

ComplexMatrix swap_operator(std::size_t n) {
  ComplexMatrix s(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i * n + j, j * n + i) = 1.0;
  return s;
}

DensityMatrix sym_antisym_family(std::size_t n, double alpha) {
  if (n < 2) throw std::invalid_argument("local dimension must be at least 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  const auto id = ComplexMatrix::identity(n * n);
  const auto swap = swap_operator(n);
  const double nd = static_cast<double>(n);
  const ComplexMatrix p_sym = (id + swap) * Complex(0.5);
  const ComplexMatrix p_anti = (id - swap) * Complex(0.5);
  ComplexMatrix mat = p_sym * Complex(alpha / (nd * (nd + 1.0) / 2.0));
  mat += p_anti * Complex((1.0 - alpha) / (nd * (nd - 1.0) / 2.0));
  return DensityMatrix(std::move(mat), {n, n});
}

PureState basis_state(const Dims& dims, std::size_t index) {
  const std::size_t n = total_dimension(dims);
  if (index >= n) throw std::invalid_argument("basis index out of range");
  ComplexVector v(n);
  v[index] = 1.0;
  return PureState(std::move(v), dims);
}

PureState random_pure(const Dims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return PureState::normalized(gaussian_vector(total_dimension(dims), rng), dims);
}

DensityMatrix random_density(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  const std::size_t n = total_dimension(dims);
  if (rank == 0 || rank > n) throw std::invalid_argument("rank must lie in [1, total dimension]");
  std::mt19937_64 rng(seed);
  const auto g_entries = gaussian_vector(n * rank, rng);
  const ComplexMatrix g(n, rank, g_entries);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(hermitian_part(rho), dims);
}

DensityMatrix random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed) {
  if (terms == 0) throw std::invalid_argument("a separable mixture needs at least one term");
  const std::size_t n = total_dimension(dims);
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) total += (w = expo(rng));

  ComplexMatrix rho(n, n);
  for (std::size_t t = 0; t < terms; ++t) {
    ComplexVector product{1.0};
    for (auto d : dims) {
      auto local = gaussian_vector(d, rng);
      const double len = norm(local);
      for (auto& z : local) z /= len;
      product = tensor(product, local);
    }
    rho += ComplexMatrix::projector(product) * Complex(weights[t] / total);
  }
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix(hermitian_part(rho), dims);
}

}  // namespace entangle
