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

#include "entangle/witness.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entangle/separability.hpp"
#include "random_util.hpp"

namespace entangle {

namespace {

constexpr double kSeeSawTol = 1e-12;
constexpr int kMaxSeeSawIterations = 2000;

void require_bipartite(const Dims& dims) {
  if (dims.size() != 2) throw std::invalid_argument("operation requires a bipartite operator");
}

// (<a| ⊗ 1) W (|a> ⊗ 1), an operator on B.
ComplexMatrix contract_first(const ComplexMatrix& w, std::span<const Complex> a, std::size_t db) {
  const std::size_t da = a.size();
  ComplexMatrix out(db, db);
  for (std::size_t i = 0; i < da; ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; j < da; ++j) {
      const Complex coeff = std::conj(a[i]) * a[j];
      if (coeff == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(k, l) += coeff * w(i * db + k, j * db + l);
    }
  }
  return hermitian_part(out);
}

// (1 ⊗ <b|) W (1 ⊗ |b>), an operator on A.
ComplexMatrix contract_second(const ComplexMatrix& w, std::span<const Complex> b, std::size_t da) {
  const std::size_t db = b.size();
  ComplexMatrix out(da, da);
  for (std::size_t k = 0; k < db; ++k) {
    if (b[k] == Complex{}) continue;
    for (std::size_t l = 0; l < db; ++l) {
      const Complex coeff = std::conj(b[k]) * b[l];
      if (coeff == Complex{}) continue;
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) out(i, j) += coeff * w(i * db + k, j * db + l);
    }
  }
  return hermitian_part(out);
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

std::string to_string(const WitnessKind& kind) {
  switch (kind.cls) {
    case WitnessClass::Entanglement: return "entanglement";
    case WitnessClass::Schmidt: return "schmidt-" + std::to_string(kind.schmidt_k);
    case WitnessClass::GHZ: return "ghz";
    case WitnessClass::W: return "w";
  }
  return "?";
}

WitnessKind parse_witness_kind(std::string_view text) {
  if (text == "entanglement") return WitnessKind::entanglement();
  if (text == "ghz") return WitnessKind::ghz();
  if (text == "w") return WitnessKind::w();
  constexpr std::string_view prefix = "schmidt-";
  if (text.starts_with(prefix)) {
    std::size_t k = 0;
    const auto digits = text.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 2)
      return WitnessKind::schmidt(k);
  }
  throw std::invalid_argument("unknown witness kind '" + std::string(text) + "'");
}

WitnessOperator::WitnessOperator(ComplexMatrix mat, Dims dims, WitnessKind kind,
                                 std::string provenance)
    : mat_(std::move(mat)), dims_(std::move(dims)), kind_(kind), provenance_(std::move(provenance)) {
  if (!mat_.is_square() || total_dimension(dims_) != mat_.rows())
    throw std::invalid_argument("witness size does not match the dimension list");
  const double err = hermiticity_error(mat_);
  if (err > kDefaultHermitianTol)
    throw std::invalid_argument("witness operator is not Hermitian (max deviation " +
                                format_double(err) + ")");
  mat_ = hermitian_part(mat_);
  if (kind_.cls == WitnessClass::Schmidt && kind_.schmidt_k < 2)
    throw std::invalid_argument("Schmidt witnesses need k >= 2");
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Transpose: return "transpose";
    case MapKind::Reduction: return "reduction";
  }
  return "?";
}

double evaluate(const WitnessOperator& w, const DensityMatrix& rho) {
  if (w.dims() != rho.dims()) throw std::invalid_argument("witness and state dimensions differ");
  const auto& a = w.matrix();
  const auto& b = rho.matrix();
  const std::size_t n = a.rows();
  Complex t = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
  if (std::abs(t.imag()) > 1e-10)
    throw std::logic_error("tr(W rho) has imaginary part " + format_double(t.imag()));
  return t.real();
}

WitnessOperator construct_from_npt(const DensityMatrix& rho) {
  require_bipartite(rho.dims());
  const auto eig = hermitian_eig(partial_transpose(rho.matrix(), rho.dims(), 0));
  const double lowest = eig.eigenvalues.front();
  if (lowest >= -kSignTol)
    throw std::invalid_argument("state has a positive partial transpose (min eigenvalue " +
                                format_double(lowest) + "); no witness can be built from it");
  const auto eta = eig.eigenvectors.column(0);
  auto mat = partial_transpose(ComplexMatrix::projector(eta), rho.dims(), 0);
  return WitnessOperator(std::move(mat), rho.dims(), WitnessKind::entanglement(),
                         "partial transpose of the negative eigenprojector of rho^T_A (eigenvalue " +
                             format_double(lowest) + ")");
}

ProductMinimum min_product_expectation(const WitnessOperator& w, std::size_t restarts,
                                       std::uint64_t seed) {
  require_bipartite(w.dims());
  if (restarts == 0) throw std::invalid_argument("at least one restart is required");
  const std::size_t da = w.dims()[0], db = w.dims()[1];
  const auto& mat = w.matrix();

  ProductMinimum best{std::numeric_limits<double>::infinity(), {}, {}, restarts, 0};
  for (std::size_t r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    ComplexVector a = detail::random_unit_vector(da, rng);
    ComplexVector b;
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxSeeSawIterations; ++it) {
      const auto eb = hermitian_eig(contract_first(mat, a, db));
      b = eb.eigenvectors.column(0);
      const auto ea = hermitian_eig(contract_second(mat, b, da));
      a = ea.eigenvectors.column(0);
      const double next = ea.eigenvalues.front();
      const bool done = value - next < kSeeSawTol;
      value = std::min(value, next);
      if (done) break;
    }
    if (value < best.value) best = {value, a, b, restarts, r};
  }
  return best;
}

ShiftedWitness shift_optimize(const WitnessOperator& w, std::size_t restarts, std::uint64_t seed) {
  const auto found = min_product_expectation(w, restarts, seed);
  const double shift = found.value;
  const std::size_t n = w.matrix().rows();
  ComplexMatrix mat = w.matrix() - ComplexMatrix::identity(n) * Complex(shift);
  WitnessOperator shifted(std::move(mat), w.dims(), w.kind(),
                          w.provenance() + "; shift-optimized by " + format_double(shift) + " (" +
                              std::to_string(restarts) + " restarts)");
  const double residual = min_product_expectation(shifted, restarts, seed).value;
  if (residual < -1e-8 || residual > 1e-6)
    throw std::runtime_error("shifted witness failed its tangency post-check (residual " +
                             format_double(residual) + ")");
  return {std::move(shifted), shift, residual, restarts};
}

WitnessOperator jamiolkowski(MapKind map, std::size_t d) {
  const auto p_plus = ComplexMatrix::projector(maximally_entangled(d).vector());
  ComplexMatrix out(d * d, d * d);
  // Apply the map to every d x d block sigma_ij = (<i| ⊗ 1) P+ (|j> ⊗ 1).
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix block(d, d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) block(k, l) = p_plus(i * d + k, j * d + l);
      ComplexMatrix image = block;
      switch (map) {
        case MapKind::Transpose:
          image = block.transpose();
          break;
        case MapKind::Reduction:
          image = ComplexMatrix::identity(d) * block.trace() - block;
          break;
      }
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) out(i * d + k, j * d + l) = image(k, l);
    }
  }
  return WitnessOperator(std::move(out), {d, d}, WitnessKind::entanglement(),
                         "Jamiolkowski image of the " + std::string(to_string(map)) + " map");
}

WitnessOperator ghz_witness() {
  ComplexMatrix mat = ComplexMatrix::identity(8) * Complex(0.75);
  mat -= ComplexMatrix::projector(ghz().vector());
  return WitnessOperator(std::move(mat), {2, 2, 2}, WitnessKind::ghz(), "3/4 identity - P_GHZ");
}

WitnessOperator w_witness() {
  ComplexMatrix mat = ComplexMatrix::identity(8) * Complex(2.0 / 3.0);
  mat -= ComplexMatrix::projector(w_state().vector());
  return WitnessOperator(std::move(mat), {2, 2, 2}, WitnessKind::w(), "2/3 identity - P_W");
}

SchmidtWitnessResult schmidt_witness_eval(const WitnessOperator& w, const DensityMatrix& rho) {
  if (w.kind().cls != WitnessClass::Schmidt)
    throw std::invalid_argument("expected a Schmidt witness, got '" + to_string(w.kind()) + "'");
  const double value = evaluate(w, rho);
  return {value, w.kind().schmidt_k, value < -kSignTol};
}

TripartiteEvidence TripartiteClassification::strongest() const {
  if (ghz_not_w) return TripartiteEvidence::GhzNotW;
  if (outside_biseparable) return TripartiteEvidence::OutsideBiseparable;
  return TripartiteEvidence::NoConclusion;
}

TripartiteClassification classify_tripartite(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2, 2}) throw std::invalid_argument("expected a three-qubit state");
  const double g = evaluate(ghz_witness(), rho);
  const double w = evaluate(w_witness(), rho);
  return {g, w, w < -kSignTol, g < -kSignTol};
}

}  // namespace entangle
