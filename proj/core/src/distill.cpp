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

#include "entangle/distill.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entangle/separability.hpp"
#include "random_util.hpp"

namespace entangle {

namespace {

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw std::invalid_argument("operation requires a two-qubit state");
}

ComplexMatrix cnot() {
  ComplexMatrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

double phi_plus_fidelity(const ComplexMatrix& rho) {
  // <Phi+|rho|Phi+> = (rho00,00 + rho00,11 + rho11,00 + rho11,11) / 2
  return 0.5 * (rho(0, 0) + rho(0, 3) + rho(3, 0) + rho(3, 3)).real();
}

// Orthonormal basis of span{u, v}; a random direction completes it when the
// span is one-dimensional.
std::pair<ComplexVector, ComplexVector> orthonormal_pair(ComplexVector u, ComplexVector v,
                                                         std::mt19937_64& rng) {
  double nu = norm(u);
  if (nu < 1e-14) {
    std::swap(u, v);
    nu = norm(u);
  }
  if (nu < 1e-14) {
    u = detail::random_unit_vector(u.size(), rng);
    nu = 1.0;
  }
  for (auto& z : u) z /= nu;
  auto project_out = [&](ComplexVector& x) {
    const Complex c = inner(u, x);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * u[i];
  };
  project_out(v);
  double nv = norm(v);
  while (nv < 1e-10 * std::max(1.0, nu)) {
    v = detail::random_unit_vector(u.size(), rng);
    project_out(v);
    nv = norm(v);
  }
  for (auto& z : v) z /= nv;
  return {std::move(u), std::move(v)};
}

// Compression of m (on C^da ⊗ C^db) to span{e_k} ⊗ C^db, basis index k*db + j.
ComplexMatrix compress_left(const ComplexMatrix& m, const std::array<ComplexVector, 2>& e,
                            std::size_t da, std::size_t db) {
  ComplexMatrix out(2 * db, 2 * db);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t kk = 0; kk < 2; ++kk)
      for (std::size_t i = 0; i < da; ++i) {
        const Complex ci = std::conj(e[k][i]);
        if (ci == Complex{}) continue;
        for (std::size_t ii = 0; ii < da; ++ii) {
          const Complex c = ci * e[kk][ii];
          if (c == Complex{}) continue;
          for (std::size_t j = 0; j < db; ++j)
            for (std::size_t jj = 0; jj < db; ++jj)
              out(k * db + j, kk * db + jj) += c * m(i * db + j, ii * db + jj);
        }
      }
  return hermitian_part(out);
}

// Compression of m to C^da ⊗ span{f_l}, basis index i*2 + l.
ComplexMatrix compress_right(const ComplexMatrix& m, const std::array<ComplexVector, 2>& f,
                             std::size_t da, std::size_t db) {
  ComplexMatrix out(2 * da, 2 * da);
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t ll = 0; ll < 2; ++ll)
      for (std::size_t j = 0; j < db; ++j) {
        const Complex cj = std::conj(f[l][j]);
        if (cj == Complex{}) continue;
        for (std::size_t jj = 0; jj < db; ++jj) {
          const Complex c = cj * f[ll][jj];
          if (c == Complex{}) continue;
          for (std::size_t i = 0; i < da; ++i)
            for (std::size_t ii = 0; ii < da; ++ii)
              out(i * 2 + l, ii * 2 + ll) += c * m(i * db + j, ii * db + jj);
        }
      }
  return hermitian_part(out);
}

}  // namespace

IsotropicParams twirl_to_isotropic(const DensityMatrix& rho) {
  require_two_qubit(rho);
  const double f = phi_plus_fidelity(rho.matrix());
  return {(4.0 * f - 1.0) / 3.0, f};
}

RecurrenceOutcome recurrence_step(const DensityMatrix& rho) {
  require_two_qubit(rho);
  // Two copies in the order (A1, B1, A2, B2).
  const Dims pair_dims{2, 2, 2, 2};
  ComplexMatrix joint = tensor(rho.matrix(), rho.matrix());

  // Local CNOTs act on (A1, A2) and (B1, B2).
  const std::vector<std::size_t> to_local{0, 2, 1, 3};
  joint = permute_subsystems(joint, pair_dims, to_local);
  const ComplexMatrix gate = tensor(cnot(), cnot());
  joint = gate * joint * gate.adjoint();
  // (A1, A2, B1, B2) -> (A1, B1, A2, B2); the permutation is its own inverse.
  joint = permute_subsystems(joint, pair_dims, to_local);

  // Keep the branches where the second pair gives identical outcomes.
  ComplexMatrix kept(4, 4);
  for (std::size_t m = 0; m < 2; ++m) {
    const std::size_t tail = m * 2 + m;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) kept(r, c) += joint(r * 4 + tail, c * 4 + tail);
  }
  const double success = kept.trace().real();
  if (success < 1e-12) throw std::runtime_error("recurrence step has vanishing success probability");
  kept *= Complex(1.0 / success);
  return {DensityMatrix(hermitian_part(kept), {2, 2}), success};
}

FidelityUpdate fidelity_map(double f) {
  if (!(f >= 0.25 - 1e-12 && f <= 1.0 + 1e-12))
    throw std::invalid_argument("fidelity must lie in [1/4, 1]");
  const double p = std::clamp((4.0 * f - 1.0) / 3.0, 0.0, 1.0);
  const auto out = recurrence_step(isotropic(p, 2));
  return {phi_plus_fidelity(out.state.matrix()), out.success_probability};
}

RecurrenceTrace iterate(double f0, double target, std::size_t max_steps) {
  if (!(f0 >= 0.25 && f0 <= 1.0)) throw std::invalid_argument("fidelity must lie in [1/4, 1]");
  if (target > 1.0) throw std::invalid_argument("target fidelity cannot exceed 1");
  RecurrenceTrace trace;
  if (f0 >= target) {
    trace.target_reached = true;
    return trace;
  }
  if (f0 <= 0.5)
    throw std::invalid_argument("recurrence does not improve fidelities at or below 1/2");

  double f = f0;
  for (std::size_t k = 0; k < max_steps && f < target; ++k) {
    const auto next = fidelity_map(f);
    trace.steps.push_back({f, next.fidelity, next.success_probability});
    trace.pairs_consumed_estimate *= 2.0 / next.success_probability;
    f = next.fidelity;
  }
  trace.target_reached = f >= target;
  return trace;
}

RecurrenceTrace iterate_state(const DensityMatrix& rho, double target, std::size_t max_steps,
                              bool retwirl) {
  require_two_qubit(rho);
  RecurrenceTrace trace;
  DensityMatrix current = rho;
  double f = phi_plus_fidelity(current.matrix());
  for (std::size_t k = 0; k < max_steps && f < target; ++k) {
    if (retwirl) current = isotropic(std::clamp((4.0 * f - 1.0) / 3.0, 0.0, 1.0), 2);
    auto out = recurrence_step(current);
    const double next = phi_plus_fidelity(out.state.matrix());
    trace.steps.push_back({f, next, out.success_probability});
    trace.pairs_consumed_estimate *= 2.0 / out.success_probability;
    current = std::move(out.state);
    f = next;
  }
  trace.target_reached = f >= target;
  return trace;
}

std::string to_string(const DistillabilityCertificate& cert) {
  if (cert.verdict == DistillabilityVerdict::Distillable)
    return "Distillable(" + std::to_string(cert.copies) + ")";
  return "Inconclusive";
}

DistillabilityCertificate distillability_test(const DensityMatrix& rho, std::size_t copies,
                                              std::size_t restarts, std::uint64_t seed) {
  if (!rho.is_bipartite()) throw std::invalid_argument("distillability test needs a bipartite state");
  if (copies != 1 && copies != 2) throw std::invalid_argument("copies must be 1 or 2");
  if (restarts == 0) throw std::invalid_argument("at least one restart is required");
  const std::size_t da0 = rho.dims()[0], db0 = rho.dims()[1];
  std::size_t total = 1;
  for (std::size_t c = 0; c < copies; ++c) total *= da0 * db0;
  if (total > kMaxDistillabilityDimension)
    throw std::invalid_argument("dimension budget exceeded: (dA*dB)^n = " + std::to_string(total) +
                                " > " + std::to_string(kMaxDistillabilityDimension));

  const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.dims(), 0);
  ComplexMatrix m = pt;
  std::size_t da = da0, db = db0;
  if (copies == 2) {
    m = permute_subsystems(tensor(pt, pt), {da0, db0, da0, db0}, {0, 2, 1, 3});
    da = da0 * da0;
    db = db0 * db0;
  }

  DistillabilityCertificate best{copies, std::numeric_limits<double>::infinity(), {}, {da, db},
                                 DistillabilityVerdict::Inconclusive, restarts};
  for (std::size_t r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    auto [e0, e1] = orthonormal_pair(detail::random_unit_vector(da, rng),
                                     detail::random_unit_vector(da, rng), rng);
    std::array<ComplexVector, 2> left{std::move(e0), std::move(e1)};
    double value = std::numeric_limits<double>::infinity();
    ComplexVector psi(da * db);

    for (int it = 0; it < 1000; ++it) {
      // Fix the A-side plane, optimize everything else.
      const auto el = hermitian_eig(compress_left(m, left, da, db));
      const auto c = el.eigenvectors.column(0);
      ComplexVector g0(c.begin(), c.begin() + db), g1(c.begin() + db, c.end());
      auto [f0, f1] = orthonormal_pair(g0, g1, rng);
      std::array<ComplexVector, 2> right{std::move(f0), std::move(f1)};

      // Fix the B-side plane spanned by the current vector's B factors.
      const auto er = hermitian_eig(compress_right(m, right, da, db));
      const auto d = er.eigenvectors.column(0);
      ComplexVector h0(da), h1(da);
      for (std::size_t i = 0; i < da; ++i) {
        h0[i] = d[i * 2];
        h1[i] = d[i * 2 + 1];
      }
      const double next = er.eigenvalues.front();
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
          psi[i * db + j] = h0[i] * right[0][j] + h1[i] * right[1][j];

      auto [n0, n1] = orthonormal_pair(h0, h1, rng);
      left = {std::move(n0), std::move(n1)};
      const bool done = value - next < 1e-12;
      value = std::min(value, next);
      if (done) break;
    }
    if (value < best.value) {
      best.value = value;
      best.witness_vector = psi;
    }
  }
  best.verdict = best.value < -kSignTol ? DistillabilityVerdict::Distillable
                                        : DistillabilityVerdict::Inconclusive;
  return best;
}

}  // namespace entangle
