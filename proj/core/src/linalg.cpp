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

#include "entangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entangle {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

void require_square_of(const ComplexMatrix& m, const Dims& dims) {
  require(m.is_square(), "matrix must be square");
  require(!dims.empty(), "dimension list must be non-empty");
  require(total_dimension(dims) == m.rows(), "dimension list does not match matrix size");
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
  std::size_t n = 1;
  for (auto d : dims) {
    require(d > 0, "subsystem dimensions must be positive");
    n *= d;
  }
  return n;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  require(data_.size() == rows * cols, "entry count must equal rows * cols");
  for (const auto& z : data_) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) { return outer(v, v); }

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

Complex ComplexMatrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  ComplexMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  require(m.cols() == v.size(), "matrix-vector shape mismatch");
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  require(u.size() == v.size(), "inner product length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex expectation(const ComplexMatrix& m, std::span<const Complex> v) {
  return inner(v, m * v);
}

double hermiticity_error(const ComplexMatrix& h) {
  require(h.is_square(), "Hermiticity is defined for square matrices only");
  double err = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j) err = std::max(err, std::abs(h(i, j) - std::conj(h(j, i))));
  return err;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  require(h.is_square(), "Hermitian part of a non-square matrix");
  ComplexMatrix out = h;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    out(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < h.cols(); ++j) {
      const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix m(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) m(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return m;
}

ComplexVector tensor(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector v(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) v[i * b.size() + k] = a[i] * b[k];
  return v;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims,
                            const std::vector<bool>& keep) {
  require_square_of(rho, dims);
  require(keep.size() == dims.size(), "keep mask length must match the dimension list");

  const std::size_t n = rho.rows();
  const auto strides = strides_of(dims);
  std::size_t kept_dim = 1;
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (keep[s]) kept_dim *= dims[s];

  std::vector<std::size_t> kept_index(n), traced_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ki = 0, ti = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      const std::size_t digit = (i / strides[s]) % dims[s];
      if (keep[s])
        ki = ki * dims[s] + digit;
      else
        ti = ti * dims[s] + digit;
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Dims& dims, std::size_t keep) {
  require(keep < dims.size(), "subsystem index out of range");
  std::vector<bool> mask(dims.size(), false);
  mask[keep] = true;
  return partial_trace(rho, dims, mask);
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Dims& dims,
                                std::size_t subsystem) {
  require_square_of(rho, dims);
  require(subsystem < dims.size(), "subsystem index out of range");
  const std::size_t n = rho.rows();
  const std::size_t stride = strides_of(dims)[subsystem];
  const std::size_t d = dims[subsystem];

  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      // Swap the subsystem digits of row and column.
      const std::size_t src_i = i - di * stride + dj * stride;
      const std::size_t src_j = j - dj * stride + di * stride;
      out(i, j) = rho(src_i, src_j);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> permutation_map(const Dims& dims, const std::vector<std::size_t>& order) {
  require(order.size() == dims.size(), "permutation length must match the dimension list");
  std::vector<bool> seen(dims.size(), false);
  for (auto o : order) {
    require(o < dims.size() && !seen[o], "order must be a permutation of subsystem indices");
    seen[o] = true;
  }
  Dims new_dims(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];
  const auto old_strides = strides_of(dims);
  const auto new_strides = strides_of(new_dims);
  const std::size_t n = total_dimension(dims);

  // map[new_index] = old_index
  std::vector<std::size_t> map(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t digit = (idx / new_strides[k]) % new_dims[k];
      old += digit * old_strides[order[k]];
    }
    map[idx] = old;
  }
  return map;
}

}  // namespace

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const Dims& dims,
                                 const std::vector<std::size_t>& order) {
  require_square_of(m, dims);
  const auto map = permutation_map(dims, order);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

ComplexVector permute_subsystems(std::span<const Complex> v, const Dims& dims,
                                 const std::vector<std::size_t>& order) {
  require(total_dimension(dims) == v.size(), "dimension list does not match vector length");
  const auto map = permutation_map(dims, order);
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[map[i]];
  return out;
}

HermitianEigenResult hermitian_eig(const ComplexMatrix& h, double tol) {
  require(h.is_square(), "eigendecomposition requires a square matrix");
  const double herm_err = hermiticity_error(h);
  if (herm_err > tol) {
    throw std::invalid_argument("matrix is not Hermitian: max |H - H^dagger| = " +
                                std::to_string(herm_err));
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  // Absolute threshold, floored relative to the matrix scale so that large
  // inputs still terminate once rounding dominates.
  const double threshold = std::max(1e-14, 1e-16 * a.frobenius_norm());
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Rotate the phase of a_pq away, then annihilate it with a real
        // Jacobi rotation.
        const Complex phase = apq / r;
        const double zeta = (aqq - app) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * std::conj(phase);
        const Complex g_qq = c * std::conj(phase);

        // a <- a G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        // a <- G^dagger a
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // v <- v G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }
  if (off_norm() >= threshold) throw std::runtime_error("Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigenResult result{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

std::vector<double> eigenvalues(const ComplexMatrix& h, double tol) {
  return hermitian_eig(h, tol).eigenvalues;
}

double min_eigenvalue(const ComplexMatrix& h, double tol) {
  return hermitian_eig(h, tol).eigenvalues.front();
}

}  // namespace entangle
