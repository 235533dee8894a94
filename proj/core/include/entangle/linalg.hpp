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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entangle {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Local dimensions of the subsystems of a composite Hilbert space, in
/// tensor-product order (first entry is the most significant index).
using Dims = std::vector<std::size_t>;

inline constexpr double kDefaultHermitianTol = 1e-10;

std::size_t total_dimension(const Dims& dims);

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexVector column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// <u|v>, antilinear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
/// <v|M|v>
Complex expectation(const ComplexMatrix& m, std::span<const Complex> v);

/// max |h - h^dagger| over entries.
double hermiticity_error(const ComplexMatrix& h);
/// (h + h^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& h);

/// Kronecker product, (a ⊗ b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(std::span<const Complex> a, std::span<const Complex> b);

/// Reduced matrix of subsystem `keep`; every other subsystem is traced out.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims, std::size_t keep);
/// Reduced matrix on the subsystems flagged in `keep` (order preserved).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            const std::vector<bool>& keep);

/// Transpose of the indices belonging to `subsystem`, all others untouched.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims,
                                std::size_t subsystem);

/// Reorders tensor factors: subsystem k of the result is subsystem
/// `order[k]` of the input.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 const std::vector<std::size_t>& order);
ComplexVector permute_subsystems(std::span<const Complex> v, const Dims& dims,
                                 const std::vector<std::size_t>& order);

struct HermitianEigenResult {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column k is the eigenvector of eigenvalues[k].
  ComplexMatrix eigenvectors;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws std::invalid_argument when max |h - h^dagger| exceeds `tol`.
HermitianEigenResult hermitian_eig(const ComplexMatrix& h, double tol = kDefaultHermitianTol);

std::vector<double> eigenvalues(const ComplexMatrix& h, double tol = kDefaultHermitianTol);
double min_eigenvalue(const ComplexMatrix& h, double tol = kDefaultHermitianTol);

/// f(H) = V f(Λ) V^dagger for a real scalar function on the spectrum.
template <typename F>
ComplexMatrix apply_spectral(const HermitianEigenResult& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

}  // namespace entangle
